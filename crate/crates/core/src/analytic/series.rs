//! Truncated power series over complex coefficients.
//!
//! Used to extract Taylor coefficients of the generating function without
//! going through its closed-form expansion.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    coeffs: Vec<Complex64>,
}

impl Series {
    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// Polynomial given by its leading coefficients, padded or truncated to `order`.
    pub fn from_coeffs(coeffs: &[Complex64], order: usize) -> Self {
        let mut padded = vec![Complex64::new(0.0, 0.0); order + 1];
        for (dst, src) in padded.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        Self { coeffs: padded }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn scale(mut self, factor: Complex64) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c *= factor);
        self
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse; the constant term must not vanish.
    pub fn recip(&self) -> Result<Series> {
        let f0 = self.leading()?;
        let mut g = vec![Complex64::new(0.0, 0.0); self.coeffs.len()];
        g[0] = 1.0 / f0;
        for n in 1..g.len() {
            let acc: Complex64 = (1..=n).map(|k| self.coeffs[k] * g[n - k]).sum();
            g[n] = -acc / f0;
        }
        Ok(Series { coeffs: g })
    }

    pub fn exp(&self) -> Series {
        // g' = f' g  =>  n g_n = sum_k k f_k g_{n-k}
        let mut g = vec![Complex64::new(0.0, 0.0); self.coeffs.len()];
        g[0] = self.coeffs[0].exp();
        for n in 1..g.len() {
            let acc: Complex64 = (1..=n).map(|k| (k as f64) * self.coeffs[k] * g[n - k]).sum();
            g[n] = acc / n as f64;
        }
        Series { coeffs: g }
    }

    /// `f^alpha` on the principal branch of the constant term.
    pub fn powf(&self, alpha: f64) -> Result<Series> {
        // f g' = alpha f' g  =>  n f_0 g_n = sum_k (alpha k - (n - k)) f_k g_{n-k}
        let f0 = self.leading()?;
        let mut g = vec![Complex64::new(0.0, 0.0); self.coeffs.len()];
        g[0] = f0.powf(alpha);
        for n in 1..g.len() {
            let acc: Complex64 = (1..=n)
                .map(|k| (alpha * k as f64 - (n - k) as f64) * self.coeffs[k] * g[n - k])
                .sum();
            g[n] = acc / (n as f64 * f0);
        }
        Ok(Series { coeffs: g })
    }

    fn leading(&self) -> Result<Complex64> {
        let f0 = self.coeffs[0];
        if f0.norm() < 1e-300 {
            return Err(Error::Pole {
                x: Complex64::new(0.0, 0.0),
                singularity: Complex64::new(0.0, 0.0),
                distance: f0.norm(),
            });
        }
        Ok(f0)
    }
}
