//! Nekrasov row quantities and matrix classification.
//!
//! For `A = [a_ij]` with nonzero diagonal,
//!
//! ```text
//! h_1 = r_1,   h_i = Σ_{j<i} |a_ij| / |a_jj| · h_j + Σ_{j>i} |a_ij|
//! z_1 = 1,     z_i = Σ_{j<i} |a_ij| / |a_jj| · z_j + 1
//! ```
//!
//! and `A` is a Nekrasov matrix when `|a_ii| > h_i` for every row. Both
//! sequences are also the scaled solutions of lower-triangular systems,
//! `h = |D| (|D|-|L|)⁻¹ |U| e` and `z = |D| (|D|-|L|)⁻¹ e`; the `*_by_solve`
//! variants compute them that way and are used as cross-checks.

use alloc::vec;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{deleted_row_sums, triangular_split, SquareMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(Serialize),
    serde(rename_all = "SCREAMING_SNAKE_CASE")
)]
pub enum Verdict {
    Sdd,
    NekrasovNotSdd,
    NotNekrasov,
}

impl Verdict {
    pub fn is_nekrasov(self) -> bool {
        self != Verdict::NotNekrasov
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Sdd => "SDD",
            Verdict::NekrasovNotSdd => "NEKRASOV_NOT_SDD",
            Verdict::NotNekrasov => "NOT_NEKRASOV",
        }
    }
}

/// `h`, `z` and `h_i / |a_ii|`, available when the diagonal has no zeros.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct RowQuantities {
    pub h: Vec<f64>,
    pub z: Vec<f64>,
    pub h_ratio: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct NekrasovProfile {
    pub n: usize,
    /// `|a_ii|`
    pub diag: Vec<f64>,
    /// Deleted row sums `r_i(A)`.
    pub r: Vec<f64>,
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub quantities: Option<RowQuantities>,
    pub verdict: Verdict,
    /// First (0-based) row with `|a_ii| <= h_i`, set only for `NotNekrasov`.
    pub witness: Option<usize>,
}

impl NekrasovProfile {
    /// `min_i (|a_ii| - h_i)`; positive exactly for Nekrasov matrices.
    pub fn margin(&self) -> Option<f64> {
        let q = self.quantities.as_ref()?;
        Some(
            self.diag
                .iter()
                .zip(&q.h)
                .map(|(d, h)| d - h)
                .fold(f64::INFINITY, f64::min),
        )
    }

    pub fn h(&self) -> Option<&[f64]> {
        self.quantities.as_ref().map(|q| q.h.as_slice())
    }

    pub fn z(&self) -> Option<&[f64]> {
        self.quantities.as_ref().map(|q| q.z.as_slice())
    }
}

fn require_nonzero_diagonal(diag: &[f64]) -> Result<()> {
    match diag.iter().position(|&d| d == 0.0) {
        Some(row) => Err(Error::ZeroDiagonal { row }),
        None => Ok(()),
    }
}

/// `h_i` for rows `0..limit`, which needs `|a_jj| != 0` for `j < limit - 1`.
fn h_prefix(a: &SquareMatrix, diag: &[f64], limit: usize) -> Vec<f64> {
    let n = a.dim();
    let mut h: Vec<f64> = Vec::with_capacity(limit);
    for i in 0..limit {
        let mut acc = 0.0;
        for (j, hj) in h.iter().enumerate() {
            acc += a.modulus(i, j) / diag[j] * hj;
        }
        for j in (i + 1)..n {
            acc += a.modulus(i, j);
        }
        h.push(acc);
    }
    h
}

/// `h_i(A)` by the defining recursion, in increasing row order.
pub fn compute_h_recursive(a: &SquareMatrix) -> Result<Vec<f64>> {
    let diag = a.diag_moduli();
    require_nonzero_diagonal(&diag)?;
    Ok(h_prefix(a, &diag, a.dim()))
}

/// `h_i(A) = |a_ii| [(|D|-|L|)⁻¹ |U| e]_i` via forward substitution.
pub fn compute_h_by_solve(a: &SquareMatrix) -> Result<Vec<f64>> {
    let split = triangular_split(a);
    let y = split.forward_solve(&split.upper_row_sums())?;
    Ok(y.iter().zip(&split.diag).map(|(y, d)| d * y).collect())
}

/// `z_i(A)` by the defining recursion.
pub fn compute_z(a: &SquareMatrix) -> Result<Vec<f64>> {
    let diag = a.diag_moduli();
    require_nonzero_diagonal(&diag)?;
    let mut z: Vec<f64> = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let mut acc = 0.0;
        for (j, zj) in z.iter().enumerate() {
            acc += a.modulus(i, j) / diag[j] * zj;
        }
        z.push(acc + 1.0);
    }
    Ok(z)
}

/// `z_i(A) = |a_ii| [(|D|-|L|)⁻¹ e]_i` via forward substitution.
pub fn compute_z_by_solve(a: &SquareMatrix) -> Result<Vec<f64>> {
    let split = triangular_split(a);
    let y = split.forward_solve(&vec![1.0; a.dim()])?;
    Ok(y.iter().zip(&split.diag).map(|(y, d)| d * y).collect())
}

/// Classifies `A` as SDD, Nekrasov (but not SDD) or neither.
///
/// A zero diagonal entry is not an error here: the defining inequality
/// fails at that row, so the verdict is `NotNekrasov`.
pub fn classify(a: &SquareMatrix) -> NekrasovProfile {
    let n = a.dim();
    let diag = a.diag_moduli();
    let r = deleted_row_sums(a);
    let first_zero = diag.iter().position(|&d| d == 0.0);

    let (quantities, witness) = match first_zero {
        None => {
            let h = h_prefix(a, &diag, n);
            let z = compute_z(a).expect("diagonal checked nonzero");
            let h_ratio = h.iter().zip(&diag).map(|(h, d)| h / d).collect();
            let witness = (0..n).find(|&i| !(diag[i] > h[i]));
            (Some(RowQuantities { h, z, h_ratio }), witness)
        }
        Some(k) => {
            // h_i for i <= k only needs the diagonal entries above row k.
            let h = h_prefix(a, &diag, k + 1);
            let witness = (0..=k).find(|&i| !(diag[i] > h[i]));
            (None, witness)
        }
    };

    let sdd = diag.iter().zip(&r).all(|(d, r)| d > r);
    let verdict = match (sdd, witness) {
        (true, _) => Verdict::Sdd,
        (false, None) => Verdict::NekrasovNotSdd,
        (false, Some(_)) => Verdict::NotNekrasov,
    };
    let witness = if verdict == Verdict::NotNekrasov {
        witness
    } else {
        None
    };
    NekrasovProfile {
        n,
        diag,
        r,
        quantities,
        verdict,
        witness,
    }
}

/// Nekrasov membership via `(|D|-|L|)⁻¹ |U| e < e`, independent of the
/// `h` recursion.
pub fn szulc_check(a: &SquareMatrix) -> Result<bool> {
    let split = triangular_split(a);
    let v = split.forward_solve(&split.upper_row_sums())?;
    Ok(v.iter().all(|&x| x < 1.0))
}
