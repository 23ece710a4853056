//! Upper bounds for `‖A⁻¹‖∞` of a Nekrasov matrix.
//!
//! With `N = {1..n}`, `h_i = h_i(A)`, `z_i = z_i(A)` and `d_i = |a_ii|`:
//!
//! | bound          | value                                                                  |
//! |----------------|------------------------------------------------------------------------|
//! | Varah (SDD)    | `1 / min_i (d_i - r_i)`                                                |
//! | baseline ratio | `max_i (z_i/d_i) / (1 - max_i h_i/d_i)`                                |
//! | baseline diff  | `max_i z_i / min_i (d_i - h_i)`                                        |
//! | scaled ratio   | `max{μ,1} · max_i (z_i/d_i) · max{1/(μ - h_1/d_1), 1/(1 - max_{i≠1} h_i/d_i)}` |
//! | scaled diff    | `max{μ,1} · max_i z_i / min{μ d_1 - h_1, min_{i≠1} (d_i - h_i)}`       |
//!
//! The scaled bounds come from the diagonal scaling `diag(μ, 1, …, 1)` and
//! are valid for `μ > r_1/d_1`. Each has a closed-form best `μ`; when the
//! first row is the bottleneck the scaled bound is strictly better than its
//! baseline, otherwise it reproduces the baseline exactly.
//!
//! For `n = 1` the maximum over `i ≠ 1` is taken as `0` and the minimum as
//! `+∞`.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{triangular_split, SquareMatrix};
use crate::nekrasov::{classify, NekrasovProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(Serialize),
    serde(rename_all = "SCREAMING_SNAKE_CASE")
)]
pub enum CaseTag {
    /// The first row is the bottleneck; the optimum beats the baseline.
    StrictImprovement,
    /// The optimum coincides with the baseline.
    EqualsBaseline,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct MuValue {
    pub mu: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct OptimalMu {
    pub mu_star: f64,
    pub value: f64,
    pub case: CaseTag,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct BoundReport {
    pub varah: Option<f64>,
    pub baseline_ratio: f64,
    pub baseline_diff: f64,
    pub param_ratio: Option<MuValue>,
    pub param_diff: Option<MuValue>,
    /// Absent for `n = 1`.
    pub optimal_ratio: Option<OptimalMu>,
    pub optimal_diff: Option<OptimalMu>,
    /// `min_i (|a_ii| - h_i)`.
    pub margin: f64,
    /// Scaled bounds require `μ` strictly above this value.
    pub mu_threshold: f64,
}

/// Evenly spaced `μ` values `start + k·step`, `k = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl MuGrid {
    /// Grid from `min` to `max` inclusive. The end point is kept when it is
    /// reached up to rounding of `(max - min) / step`.
    pub fn new(min: f64, max: f64, step: f64) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && step.is_finite()) {
            return Err(Error::InvalidGrid("bounds and step must be finite"));
        }
        if !(step > 0.0) {
            return Err(Error::InvalidGrid("step must be positive"));
        }
        if !(min < max) {
            return Err(Error::InvalidGrid("mu-min must be below mu-max"));
        }
        let span = (max - min) / step;
        if span > 1e9 {
            return Err(Error::InvalidGrid("too many grid points"));
        }
        // truncation is floor here since span >= 0
        let count = (span + 1e-9) as usize + 1;
        Ok(Self {
            start: min,
            step,
            count,
        })
    }

    /// `points` evenly spaced values covering `[min, max]`.
    pub fn with_points(min: f64, max: f64, points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::InvalidGrid("need at least two points"));
        }
        let step = (max - min) / (points - 1) as f64;
        let mut grid = Self::new(min, max, step)?;
        grid.count = points;
        Ok(grid)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn point(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.point(k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct SweepRow {
    pub mu: f64,
    pub bound_ratio: f64,
    pub bound_diff: f64,
}

/// Both scaled bounds tabulated over a `μ` grid.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct MuSweep {
    pub rows: Vec<SweepRow>,
    pub mu_min: f64,
    pub mu_max: f64,
    pub step: f64,
    pub baseline_ratio: f64,
    pub baseline_diff: f64,
}

/// Row data of a verified Nekrasov matrix, ready for bound evaluation.
///
/// Values come from the recursive `h`/`z` computation.
#[derive(Debug, Clone, PartialEq)]
pub struct NekrasovBounds {
    diag: Vec<f64>,
    r: Vec<f64>,
    h: Vec<f64>,
    z: Vec<f64>,
    sdd: bool,
}

impl NekrasovBounds {
    pub fn new(a: &SquareMatrix) -> Result<Self> {
        Self::from_profile(&classify(a))
    }

    pub fn from_profile(profile: &NekrasovProfile) -> Result<Self> {
        match (&profile.quantities, profile.verdict.is_nekrasov()) {
            (Some(q), true) => Ok(Self {
                diag: profile.diag.clone(),
                r: profile.r.clone(),
                h: q.h.clone(),
                z: q.z.clone(),
                sdd: profile.verdict == crate::nekrasov::Verdict::Sdd,
            }),
            _ => Err(Error::NotNekrasov {
                row: profile.witness.unwrap_or(0),
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn is_sdd(&self) -> bool {
        self.sdd
    }

    /// `r_1 / |a_11|`; the scaled bounds need `μ` strictly above it.
    pub fn mu_threshold(&self) -> f64 {
        self.r[0] / self.diag[0]
    }

    /// `h_1 / |a_11|`
    pub fn first_ratio(&self) -> f64 {
        self.h[0] / self.diag[0]
    }

    /// `max_{i≠1} h_i / |a_ii|`, zero when `n = 1`.
    pub fn rest_max_ratio(&self) -> f64 {
        (1..self.dim())
            .map(|i| self.h[i] / self.diag[i])
            .fold(0.0, f64::max)
    }

    /// `min_{i≠1} (|a_ii| - h_i)`, infinite when `n = 1`.
    pub fn rest_min_gap(&self) -> f64 {
        (1..self.dim())
            .map(|i| self.diag[i] - self.h[i])
            .fold(f64::INFINITY, f64::min)
    }

    fn max_z_over_diag(&self) -> f64 {
        self.z
            .iter()
            .zip(&self.diag)
            .map(|(z, d)| z / d)
            .fold(0.0, f64::max)
    }

    fn max_z(&self) -> f64 {
        self.z.iter().copied().fold(0.0, f64::max)
    }

    pub fn margin(&self) -> f64 {
        self.diag
            .iter()
            .zip(&self.h)
            .map(|(d, h)| d - h)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn varah(&self) -> Option<f64> {
        if !self.sdd {
            return None;
        }
        let gap = self
            .diag
            .iter()
            .zip(&self.r)
            .map(|(d, r)| d - r)
            .fold(f64::INFINITY, f64::min);
        Some(1.0 / gap)
    }

    pub fn baseline_ratio(&self) -> f64 {
        let max_ratio = self.first_ratio().max(self.rest_max_ratio());
        self.max_z_over_diag() / (1.0 - max_ratio)
    }

    pub fn baseline_diff(&self) -> f64 {
        self.max_z() / self.margin()
    }

    fn check_mu(&self, mu: f64) -> Result<()> {
        let threshold = self.mu_threshold();
        if mu > threshold && mu.is_finite() {
            Ok(())
        } else {
            Err(Error::MuOutOfRange { mu, threshold })
        }
    }

    pub fn param_ratio(&self, mu: f64) -> Result<f64> {
        self.check_mu(mu)?;
        let first = 1.0 / (mu - self.first_ratio());
        let rest = 1.0 / (1.0 - self.rest_max_ratio());
        Ok(mu.max(1.0) * self.max_z_over_diag() * first.max(rest))
    }

    pub fn param_diff(&self, mu: f64) -> Result<f64> {
        self.check_mu(mu)?;
        let denom = (mu * self.diag[0] - self.h[0]).min(self.rest_min_gap());
        Ok(mu.max(1.0) * self.max_z() / denom)
    }

    fn require_pair(&self) -> Result<()> {
        if self.dim() < 2 {
            Err(Error::DimensionTooSmall { n: self.dim() })
        } else {
            Ok(())
        }
    }

    /// Closed-form best `μ` for the scaled ratio bound,
    /// `μ* = 1 + h_1/|a_11| - max_{i≠1} h_i/|a_ii|`.
    pub fn optimal_ratio(&self) -> Result<OptimalMu> {
        self.require_pair()?;
        let (first, rest) = (self.first_ratio(), self.rest_max_ratio());
        let mu_star = 1.0 + first - rest;
        let case = if first > rest {
            CaseTag::StrictImprovement
        } else {
            CaseTag::EqualsBaseline
        };
        Ok(OptimalMu {
            mu_star,
            value: self.param_ratio(mu_star)?,
            case,
        })
    }

    /// Closed-form best `μ` for the scaled diff bound,
    /// `μ* = (min_{i≠1}(|a_ii| - h_i) + h_1) / |a_11|`.
    pub fn optimal_diff(&self) -> Result<OptimalMu> {
        self.require_pair()?;
        let gap = self.rest_min_gap();
        let mu_star = (gap + self.h[0]) / self.diag[0];
        let case = if self.diag[0] - self.h[0] < gap {
            CaseTag::StrictImprovement
        } else {
            CaseTag::EqualsBaseline
        };
        Ok(OptimalMu {
            mu_star,
            value: self.param_diff(mu_star)?,
            case,
        })
    }

    /// Open interval of `μ` on which the scaled ratio bound is strictly below
    /// the baseline; only exists in the strict-improvement case.
    pub fn ratio_improvement_interval(&self) -> Option<(f64, f64)> {
        let (first, rest) = (self.first_ratio(), self.rest_max_ratio());
        (self.dim() >= 2 && first > rest).then(|| (1.0, (1.0 - rest) / (1.0 - first)))
    }

    /// Counterpart of [`Self::ratio_improvement_interval`] for the diff bound.
    pub fn diff_improvement_interval(&self) -> Option<(f64, f64)> {
        let first_gap = self.diag[0] - self.h[0];
        let gap = self.rest_min_gap();
        (self.dim() >= 2 && first_gap < gap).then(|| (1.0, gap / first_gap))
    }

    pub fn report(&self, mu: Option<f64>) -> BoundReport {
        let param = |f: fn(&Self, f64) -> Result<f64>| {
            mu.and_then(|mu| f(self, mu).ok().map(|value| MuValue { mu, value }))
        };
        BoundReport {
            varah: self.varah(),
            baseline_ratio: self.baseline_ratio(),
            baseline_diff: self.baseline_diff(),
            param_ratio: param(Self::param_ratio),
            param_diff: param(Self::param_diff),
            optimal_ratio: self.optimal_ratio().ok(),
            optimal_diff: self.optimal_diff().ok(),
            margin: self.margin(),
            mu_threshold: self.mu_threshold(),
        }
    }

    /// Evaluates both scaled bounds on `grid`, dropping points at or below
    /// the threshold.
    pub fn sweep(&self, grid: &MuGrid) -> Result<MuSweep> {
        let rows: Vec<SweepRow> = grid
            .points()
            .filter_map(|mu| {
                let bound_ratio = self.param_ratio(mu).ok()?;
                let bound_diff = self.param_diff(mu).ok()?;
                Some(SweepRow {
                    mu,
                    bound_ratio,
                    bound_diff,
                })
            })
            .collect();
        if rows.is_empty() {
            return Err(Error::EmptyGrid {
                threshold: self.mu_threshold(),
            });
        }
        Ok(MuSweep {
            rows,
            mu_min: grid.point(0),
            mu_max: grid.point(grid.len() - 1),
            step: grid.step(),
            baseline_ratio: self.baseline_ratio(),
            baseline_diff: self.baseline_diff(),
        })
    }
}

pub fn varah_bound(a: &SquareMatrix) -> Result<f64> {
    let p = classify(a);
    if let Some(row) = p.diag.iter().zip(&p.r).position(|(d, r)| !(d > r)) {
        return Err(Error::NotSdd { row });
    }
    let gap = p
        .diag
        .iter()
        .zip(&p.r)
        .map(|(d, r)| d - r)
        .fold(f64::INFINITY, f64::min);
    Ok(1.0 / gap)
}

pub fn bound_baseline_ratio(a: &SquareMatrix) -> Result<f64> {
    Ok(NekrasovBounds::new(a)?.baseline_ratio())
}

pub fn bound_baseline_diff(a: &SquareMatrix) -> Result<f64> {
    Ok(NekrasovBounds::new(a)?.baseline_diff())
}

pub fn bound_param_ratio(a: &SquareMatrix, mu: f64) -> Result<f64> {
    NekrasovBounds::new(a)?.param_ratio(mu)
}

pub fn bound_param_diff(a: &SquareMatrix, mu: f64) -> Result<f64> {
    NekrasovBounds::new(a)?.param_diff(mu)
}

pub fn optimal_mu_ratio(a: &SquareMatrix) -> Result<OptimalMu> {
    NekrasovBounds::new(a)?.optimal_ratio()
}

pub fn optimal_mu_diff(a: &SquareMatrix) -> Result<OptimalMu> {
    NekrasovBounds::new(a)?.optimal_diff()
}

pub fn full_report(a: &SquareMatrix, mu: Option<f64>) -> Result<BoundReport> {
    Ok(NekrasovBounds::new(a)?.report(mu))
}

pub fn mu_sweep(a: &SquareMatrix, mu_min: f64, mu_max: f64, step: f64) -> Result<MuSweep> {
    let bounds = NekrasovBounds::new(a)?;
    bounds.sweep(&MuGrid::new(mu_min, mu_max, step)?)
}

/// The matrices `C(μ) = (E - (|D|-|L|)⁻¹|U|) diag(μ,1,…,1)` and
/// `B(μ) = |D| C(μ)`. For a Nekrasov `A` and `μ > r_1/|a_11|` both are SDD.
pub fn scaled_splitting_matrices(
    a: &SquareMatrix,
    mu: f64,
) -> Result<(SquareMatrix, SquareMatrix)> {
    let n = a.dim();
    let split = triangular_split(a);
    let mut c = alloc::vec![0.0; n * n];
    let mut column = alloc::vec![0.0; n];
    for k in 0..n {
        for (i, slot) in column.iter_mut().enumerate() {
            *slot = split.upper(i, k);
        }
        let solved = split.forward_solve(&column)?;
        let scale = if k == 0 { mu } else { 1.0 };
        for i in 0..n {
            let identity = if i == k { 1.0 } else { 0.0 };
            c[i * n + k] = (identity - solved[i]) * scale;
        }
    }
    let b = c
        .iter()
        .enumerate()
        .map(|(idx, x)| split.diag[idx / n] * x)
        .collect();
    Ok((
        SquareMatrix::from_real(n, c)?,
        SquareMatrix::from_real(n, b)?,
    ))
}
