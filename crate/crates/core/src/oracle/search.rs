#[cfg(feature = "serde")]
use serde::Serialize;

use crate::bounds::{MuGrid, NekrasovBounds};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(Serialize),
    serde(rename_all = "SCREAMING_SNAKE_CASE")
)]
pub enum BoundKind {
    Ratio,
    Diff,
}

/// Result of a numerical search for the best `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct SearchMinimum {
    /// Best grid point.
    pub grid_mu: f64,
    pub grid_value: f64,
    /// Golden-section refinement within one step of `grid_mu`.
    pub mu: f64,
    pub value: f64,
}

/// `(√5 - 1) / 2`
const INV_GOLDEN: f64 = 0.618_033_988_749_894_9;

fn evaluate(bounds: &NekrasovBounds, kind: BoundKind, mu: f64) -> Result<f64> {
    match kind {
        BoundKind::Ratio => bounds.param_ratio(mu),
        BoundKind::Diff => bounds.param_diff(mu),
    }
}

/// Scans `grid` for the smallest scaled bound, then refines the minimiser
/// by golden-section search over the two neighbouring grid cells.
///
/// Grid points at or below `r_1/|a_11|` are skipped.
pub fn brute_force_bound_min(
    a: &SquareMatrix,
    kind: BoundKind,
    grid: &MuGrid,
) -> Result<SearchMinimum> {
    let bounds = NekrasovBounds::new(a)?;
    let threshold = bounds.mu_threshold();

    let mut best: Option<(f64, f64)> = None;
    for mu in grid.points().filter(|&mu| mu > threshold) {
        let v = evaluate(&bounds, kind, mu)?;
        if best.is_none_or(|(_, bv)| v < bv) {
            best = Some((mu, v));
        }
    }
    let (grid_mu, grid_value) = best.ok_or(Error::EmptyGrid { threshold })?;

    let (mut lo, mut hi) = (
        (grid_mu - grid.step()).max(threshold),
        grid_mu + grid.step(),
    );
    let (mut mu, mut value) = (grid_mu, grid_value);
    let ratio = INV_GOLDEN;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = evaluate(&bounds, kind, x1)?;
    let mut f2 = evaluate(&bounds, kind, x2)?;
    for _ in 0..200 {
        for (x, f) in [(x1, f1), (x2, f2)] {
            if f < value {
                mu = x;
                value = f;
            }
        }
        if hi - lo <= 1e-15 * hi.abs().max(1.0) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = evaluate(&bounds, kind, x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = evaluate(&bounds, kind, x2)?;
        }
    }
    Ok(SearchMinimum {
        grid_mu,
        grid_value,
        mu,
        value,
    })
}
