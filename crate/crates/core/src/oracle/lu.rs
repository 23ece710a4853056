use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Sub};

use num_complex::Complex64;
#[cfg(feature = "serde")]
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Entries, SquareMatrix};

/// Pivot growth above this marks the result as numerically unreliable.
pub const NEAR_SINGULAR_GROWTH: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ExactNorm {
    /// `‖A⁻¹‖∞`
    pub value: f64,
    /// Largest magnitude seen during elimination over the largest input
    /// magnitude.
    pub pivot_growth: f64,
}

impl ExactNorm {
    pub fn is_near_singular(&self) -> bool {
        self.pivot_growth > NEAR_SINGULAR_GROWTH
    }
}

trait Field:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self>
{
    const ZERO: Self;
    const ONE: Self;
    fn modulus(self) -> f64;
}

impl Field for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl Field for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    const ONE: Self = Complex64::new(1.0, 0.0);
    fn modulus(self) -> f64 {
        self.norm()
    }
}

/// In-place `PA = LU`; `L` has a unit diagonal and is stored below it.
struct Lu<T> {
    n: usize,
    lu: Vec<T>,
    perm: Vec<usize>,
    growth: f64,
}

impl<T: Field> Lu<T> {
    fn factor(n: usize, mut a: Vec<T>) -> Result<Self> {
        let input_max = a.iter().map(|x| x.modulus()).fold(0.0, f64::max);
        let mut running_max = input_max;
        let mut perm: Vec<usize> = (0..n).collect();

        for k in 0..n {
            let (p, pivot_mod) =
                (k..n)
                    .map(|i| (i, a[i * n + k].modulus()))
                    .fold(
                        (k, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot_mod == 0.0 {
                return Err(Error::Singular { column: k });
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let pivot = a[k * n + k];
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                a[i * n + k] = factor;
                for j in (k + 1)..n {
                    let updated = a[i * n + j] - factor * a[k * n + j];
                    a[i * n + j] = updated;
                    running_max = running_max.max(updated.modulus());
                }
            }
        }
        let growth = if input_max > 0.0 {
            running_max / input_max
        } else {
            0.0
        };
        Ok(Self {
            n,
            lu: a,
            perm,
            growth,
        })
    }

    /// Solves `A x = e_col`.
    fn solve_unit(&self, col: usize) -> Vec<T> {
        let n = self.n;
        let mut x: Vec<T> = self
            .perm
            .iter()
            .map(|&p| if p == col { T::ONE } else { T::ZERO })
            .collect();
        for i in 0..n {
            let mut acc = x[i];
            for j in 0..i {
                acc = acc - self.lu[i * n + j] * x[j];
            }
            x[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc = acc - self.lu[i * n + j] * x[j];
            }
            x[i] = acc / self.lu[i * n + i];
        }
        x
    }

    fn inverse_inf_norm(&self) -> f64 {
        let n = self.n;
        let mut row_sums = vec![0.0; n];
        for col in 0..n {
            for (sum, x) in row_sums.iter_mut().zip(self.solve_unit(col)) {
                *sum += x.modulus();
            }
        }
        row_sums.into_iter().fold(0.0, f64::max)
    }
}

/// `‖A⁻¹‖∞` from an explicit inverse, column by column.
pub fn exact_inverse_inf_norm(a: &SquareMatrix) -> Result<ExactNorm> {
    let n = a.dim();
    let (value, pivot_growth) = match a.entries() {
        Entries::Real(v) => {
            let lu = Lu::factor(n, v.clone())?;
            (lu.inverse_inf_norm(), lu.growth)
        }
        Entries::Complex(v) => {
            let lu = Lu::factor(n, v.clone())?;
            (lu.inverse_inf_norm(), lu.growth)
        }
    };
    Ok(ExactNorm {
        value,
        pivot_growth,
    })
}
