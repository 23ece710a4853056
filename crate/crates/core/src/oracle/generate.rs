use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Settings for [`generate_nekrasov`]. Identical configs give identical
/// matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    /// Dimension, at least 2.
    pub n: usize,
    pub seed: u64,
    /// Off-diagonal moduli are drawn uniformly from `[0, off_diag_scale)`.
    pub off_diag_scale: f64,
    /// Probability that the matrix is made SDD rather than merely Nekrasov.
    pub sdd_fraction: f64,
    /// Draw complex entries with uniformly random phase.
    pub allow_complex: bool,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        Self {
            n,
            seed,
            off_diag_scale: 1.0,
            sdd_fraction: 0.0,
            allow_complex: false,
        }
    }

    pub fn with_sdd_fraction(mut self, fraction: f64) -> Self {
        self.sdd_fraction = fraction;
        self
    }

    pub fn with_complex(mut self, allow: bool) -> Self {
        self.allow_complex = allow;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.off_diag_scale = scale;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidConfig("n must be at least 2"));
        }
        if !(self.off_diag_scale > 0.0 && self.off_diag_scale.is_finite()) {
            return Err(Error::InvalidConfig(
                "off_diag_scale must be positive and finite",
            ));
        }
        if !(0.0..=1.0).contains(&self.sdd_fraction) {
            return Err(Error::InvalidConfig("sdd_fraction must lie in [0, 1]"));
        }
        Ok(())
    }
}

/// Draws a random Nekrasov matrix.
///
/// Off-diagonal entries are random; the diagonal is then filled in row
/// order so that `|a_ii| = f_i · h_i` with `f_i` uniform in `(1, 2]`, where
/// `h_i` already uses the final diagonal of the rows above. With probability
/// `sdd_fraction` the base is `max(h_i, r_i)` instead, which makes the
/// matrix SDD.
pub fn generate_nekrasov(config: &GeneratorConfig) -> Result<SquareMatrix> {
    config.validate()?;
    let n = config.n;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let force_sdd = rng.gen_bool(config.sdd_fraction);

    let draw = |rng: &mut ChaCha8Rng, modulus: f64| -> Complex64 {
        if config.allow_complex {
            Complex64::from_polar(modulus, rng.gen::<f64>() * TAU)
        } else if rng.gen::<bool>() {
            Complex64::new(modulus, 0.0)
        } else {
            Complex64::new(-modulus, 0.0)
        }
    };

    let mut values = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let m = config.off_diag_scale * rng.gen::<f64>();
                values[i * n + j] = draw(&mut rng, m);
            }
        }
    }

    let abs = |v: Complex64| {
        if config.allow_complex {
            v.norm()
        } else {
            v.re.abs()
        }
    };
    let mut diag: Vec<f64> = Vec::with_capacity(n);
    let mut h: Vec<f64> = Vec::with_capacity(n);
    for i in 0..n {
        // same operation order as the classifier, so the check below is exact
        let mut hi = 0.0;
        for j in 0..i {
            hi += abs(values[i * n + j]) / diag[j] * h[j];
        }
        for j in (i + 1)..n {
            hi += abs(values[i * n + j]);
        }
        let ri: f64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| abs(values[i * n + j]))
            .sum();
        let mut base = if force_sdd { hi.max(ri) } else { hi };
        if base == 0.0 {
            base = config.off_diag_scale;
        }
        let (entry, modulus) = loop {
            let factor = 2.0 - rng.gen::<f64>();
            let entry = draw(&mut rng, base * factor);
            let modulus = abs(entry);
            if modulus > base {
                break (entry, modulus);
            }
        };
        values[i * n + i] = entry;
        diag.push(modulus);
        h.push(hi);
    }

    if config.allow_complex {
        SquareMatrix::from_complex(n, values)
    } else {
        SquareMatrix::from_real(n, values.into_iter().map(|v| v.re).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nekrasov::{classify, szulc_check, Verdict};

    #[test]
    fn deterministic() {
        let cfg = GeneratorConfig::new(4, 17);
        assert_eq!(
            generate_nekrasov(&cfg).unwrap(),
            generate_nekrasov(&cfg).unwrap()
        );
        let other = GeneratorConfig::new(4, 18);
        assert_ne!(
            generate_nekrasov(&cfg).unwrap(),
            generate_nekrasov(&other).unwrap()
        );
    }

    #[test]
    fn outputs_are_nekrasov() {
        for seed in 0..200 {
            for complex in [false, true] {
                let cfg = GeneratorConfig::new(2 + (seed as usize % 9), seed).with_complex(complex);
                let a = generate_nekrasov(&cfg).unwrap();
                assert_eq!(a.is_complex(), complex);
                assert!(classify(&a).verdict.is_nekrasov(), "seed {seed}");
                assert!(szulc_check(&a).unwrap(), "seed {seed}");
            }
        }
    }

    #[test]
    fn sdd_fraction_one_forces_sdd() {
        for seed in 0..100 {
            let cfg = GeneratorConfig::new(6, seed).with_sdd_fraction(1.0);
            assert_eq!(
                classify(&generate_nekrasov(&cfg).unwrap()).verdict,
                Verdict::Sdd
            );
        }
    }

    #[test]
    fn mostly_not_sdd_by_default() {
        let non_sdd = (0..100)
            .filter(|&seed| {
                let a = generate_nekrasov(&GeneratorConfig::new(8, seed)).unwrap();
                classify(&a).verdict == Verdict::NekrasovNotSdd
            })
            .count();
        assert!(non_sdd > 50, "{non_sdd}");
    }

    #[test]
    fn invalid_configs() {
        assert!(generate_nekrasov(&GeneratorConfig::new(1, 0)).is_err());
        assert!(generate_nekrasov(&GeneratorConfig::new(3, 0).with_scale(0.0)).is_err());
        assert!(generate_nekrasov(&GeneratorConfig::new(3, 0).with_sdd_fraction(1.5)).is_err());
    }
}
