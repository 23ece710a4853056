//! Dense square matrices and the elementary matrices derived from them.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(feature = "serde")]
use serde::Serialize;

use crate::error::{Error, Result};

/// Row-major storage, either real or complex.
#[derive(Debug, Clone, PartialEq)]
pub enum Entries {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

/// Dense `n × n` matrix with finite real or complex entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Entries,
}

fn check_len(n: usize, len: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    match n.checked_mul(n) {
        Some(expected) if expected == len => Ok(()),
        Some(expected) => Err(Error::DimensionMismatch {
            expected,
            found: len,
        }),
        None => Err(Error::DimensionMismatch {
            expected: usize::MAX,
            found: len,
        }),
    }
}

impl SquareMatrix {
    pub fn from_real(n: usize, values: Vec<f64>) -> Result<Self> {
        check_len(n, values.len())?;
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: k / n,
                col: k % n,
            });
        }
        Ok(Self {
            n,
            entries: Entries::Real(values),
        })
    }

    pub fn from_complex(n: usize, values: Vec<Complex64>) -> Result<Self> {
        check_len(n, values.len())?;
        if let Some(k) = values
            .iter()
            .position(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::NonFinite {
                row: k / n,
                col: k % n,
            });
        }
        Ok(Self {
            n,
            entries: Entries::Complex(values),
        })
    }

    /// Builds a real matrix from a slice of rows.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut values = Vec::with_capacity(n * n);
        for row in rows {
            values.extend_from_slice(row.as_ref());
        }
        Self::from_real(n, values)
    }

    pub fn identity(n: usize) -> Self {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            values[i * n + i] = 1.0;
        }
        Self {
            n,
            entries: Entries::Real(values),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut values = vec![0.0; n * n];
        for (i, d) in diag.iter().enumerate() {
            values[i * n + i] = *d;
        }
        Self::from_real(n, values)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_complex(&self) -> bool {
        matches!(self.entries, Entries::Complex(_))
    }

    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    /// Entry `(i, j)` promoted to a complex number.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        match &self.entries {
            Entries::Real(v) => Complex64::new(v[i * self.n + j], 0.0),
            Entries::Complex(v) => v[i * self.n + j],
        }
    }

    /// `|a_ij|`, the modulus for complex entries.
    #[inline]
    pub fn modulus(&self, i: usize, j: usize) -> f64 {
        match &self.entries {
            Entries::Real(v) => v[i * self.n + j].abs(),
            Entries::Complex(v) => v[i * self.n + j].norm(),
        }
    }

    /// Row-major moduli `|a_ij|`.
    pub fn moduli(&self) -> Vec<f64> {
        match &self.entries {
            Entries::Real(v) => v.iter().map(|x| x.abs()).collect(),
            Entries::Complex(v) => v.iter().map(|x| x.norm()).collect(),
        }
    }

    pub fn diag_moduli(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.modulus(i, i)).collect()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.modulus(i, j)).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// The comparison matrix `⟨A⟩`: `|a_ii|` on the diagonal, `-|a_ij|` elsewhere.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ComparisonMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl ComparisonMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn to_matrix(&self) -> SquareMatrix {
        SquareMatrix {
            n: self.n,
            entries: Entries::Real(self.entries.clone()),
        }
    }
}

pub fn comparison_matrix(a: &SquareMatrix) -> ComparisonMatrix {
    let n = a.dim();
    let mut entries = a.moduli();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                entries[i * n + j] = -entries[i * n + j];
            }
        }
    }
    ComparisonMatrix { n, entries }
}

/// `|D|`, `|L|`, `|U|` of the splitting `A = D - L - U`.
///
/// `strict_lower` and `strict_upper` are dense row-major `n × n` arrays that
/// are zero on and above (resp. below) the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularSplit {
    pub n: usize,
    pub diag: Vec<f64>,
    pub strict_lower: Vec<f64>,
    pub strict_upper: Vec<f64>,
}

impl TriangularSplit {
    #[inline]
    pub fn lower(&self, i: usize, j: usize) -> f64 {
        self.strict_lower[i * self.n + j]
    }

    #[inline]
    pub fn upper(&self, i: usize, j: usize) -> f64 {
        self.strict_upper[i * self.n + j]
    }

    /// Solves `(|D| - |L|) y = b` by forward substitution.
    ///
    /// Requires a nonzero diagonal.
    pub fn forward_solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if let Some(row) = self.diag.iter().position(|&d| d == 0.0) {
            return Err(Error::ZeroDiagonal { row });
        }
        let mut y = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = b[i];
            for (j, yj) in y.iter().enumerate() {
                acc += self.lower(i, j) * yj;
            }
            y.push(acc / self.diag[i]);
        }
        Ok(y)
    }

    /// `|U| e`, the strictly upper row sums.
    pub fn upper_row_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| ((i + 1)..self.n).map(|j| self.upper(i, j)).sum())
            .collect()
    }
}

pub fn triangular_split(a: &SquareMatrix) -> TriangularSplit {
    let n = a.dim();
    let mut diag = vec![0.0; n];
    let mut strict_lower = vec![0.0; n * n];
    let mut strict_upper = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let m = a.modulus(i, j);
            match i.cmp(&j) {
                core::cmp::Ordering::Equal => diag[i] = m,
                core::cmp::Ordering::Greater => strict_lower[i * n + j] = m,
                core::cmp::Ordering::Less => strict_upper[i * n + j] = m,
            }
        }
    }
    TriangularSplit {
        n,
        diag,
        strict_lower,
        strict_upper,
    }
}

/// `r_i(A) = Σ_{j≠i} |a_ij|` for a 0-based row `i`.
pub fn deleted_row_sum(a: &SquareMatrix, i: usize) -> Result<f64> {
    let n = a.dim();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok((0..n).filter(|&j| j != i).map(|j| a.modulus(i, j)).sum())
}

pub fn deleted_row_sums(a: &SquareMatrix) -> Vec<f64> {
    (0..a.dim())
        .map(|i| {
            (0..a.dim())
                .filter(|&j| j != i)
                .map(|j| a.modulus(i, j))
                .sum()
        })
        .collect()
}
