use std::f64::consts::TAU;

use num_complex::Complex64;

use super::correlation::{correlation_linear, correlation_quadratic};
use super::SpectralLine;
use crate::error::{Error, Result};
use crate::model::{Couplings, ThermalParams};
use crate::specfun::hermite_scaled_seq;

/// `|γ-|` below this uses the Poisson line list of the pure shift.
pub const LINEAR_BRANCH_TOL: f64 = 1e-9;

/// Largest imaginary part tolerated in a line weight.
pub const WEIGHT_IMAG_TOL: f64 = 1e-10;

/// Fraction of the total weight `2π` a line list must capture.
pub const SUM_RULE_TOL: f64 = 1e-10;

const MAX_AUTO_LINES: usize = 1 << 14;

/// Zero-temperature absorption lines `n = 0..=n_max` at offsets
/// `(ω_e - ω_g)/2 + n ω_e` from the electronic gap.
///
/// Weights are `(2π/γ+) e^{-Λ_e Λ_g/γ+} (-γ-/2γ+)^n H_n(Λ_g/sqrt(-2γ+γ-))² / n!`,
/// evaluated in complex arithmetic. For a pure shift they reduce to the
/// Poisson distribution `2π Λ^{2n} e^{-Λ²} / n!`.
pub fn spectrum_zero_t(c: &Couplings, n_max: usize) -> Result<Vec<SpectralLine>> {
    let zero_point = 0.5 * (c.omega_e - c.omega_g);
    let offset = |n: usize| zero_point + n as f64 * c.omega_e;

    if c.is_linear(LINEAR_BRANCH_TOL) {
        let huang_rhys = c.lambda_g * c.lambda_g;
        let mut weight = TAU * (-huang_rhys).exp();
        let mut lines = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            if n > 0 {
                weight *= huang_rhys / n as f64;
            }
            lines.push(SpectralLine {
                offset: offset(n),
                weight,
            });
        }
        return Ok(lines);
    }

    let (gp, gm) = (c.gamma_plus, c.gamma_minus);
    let prefactor = TAU / gp * (-c.lambda_e * c.lambda_g / gp).exp();
    let scale = Complex64::new(-gm / (2.0 * gp), 0.0).sqrt();
    let argument = c.lambda_g / Complex64::new(-2.0 * gp * gm, 0.0).sqrt();
    let scaled = hermite_scaled_seq(n_max, argument, scale);

    scaled
        .values()
        .iter()
        .enumerate()
        .map(|(n, u)| {
            let weight = prefactor * u * u;
            if weight.im.abs() > WEIGHT_IMAG_TOL {
                return Err(Error::ComplexResidue {
                    what: "spectral line weight",
                    residue: weight.im.abs(),
                });
            }
            Ok(SpectralLine {
                offset: offset(n),
                weight: weight.re,
            })
        })
        .collect()
}

/// Zero-temperature line list with `n_max` raised until the lines carry at
/// least `1 - SUM_RULE_TOL` of the total weight `2π`.
pub fn spectrum_zero_t_auto(c: &Couplings) -> Result<Vec<SpectralLine>> {
    let mut n_max = 16;
    loop {
        let lines = spectrum_zero_t(c, n_max)?;
        let captured = lines.iter().map(|l| l.weight).sum::<f64>() / TAU;
        if captured >= 1.0 - SUM_RULE_TOL {
            return Ok(lines);
        }
        if n_max >= MAX_AUTO_LINES {
            return Err(Error::LineBudget {
                lines: n_max + 1,
                captured,
            });
        }
        n_max *= 2;
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteTemperatureOptions {
    /// Damping rate turning each line into a Lorentzian of half-width `eta`.
    pub eta: f64,
    /// Integration cutoff; defaults to `8 / eta`.
    pub t_max: Option<f64>,
    /// Sampling step of the correlation function; defaults to
    /// `2π / (1000 max(ω_g, ω_e))`.
    pub time_step: Option<f64>,
}

impl FiniteTemperatureOptions {
    pub fn with_eta(eta: f64) -> Self {
        Self {
            eta,
            t_max: None,
            time_step: None,
        }
    }
}

/// `∫_0^h e^{zτ/h} dτ / h` and `∫_0^h τ e^{zτ/h} dτ / h²` for `z = s h`.
fn filon_weights(z: Complex64) -> (Complex64, Complex64) {
    if z.norm() < 1e-2 {
        // Σ z^k / (k+1)!  and  Σ z^k / (k! (k+2))
        let mut term = Complex64::new(1.0, 0.0);
        let mut first = Complex64::new(0.0, 0.0);
        let mut second = Complex64::new(0.0, 0.0);
        for k in 0..10 {
            first += term / (k as f64 + 1.0);
            second += term / (k as f64 + 2.0);
            term *= z / (k as f64 + 1.0);
        }
        (first, second)
    } else {
        let e = z.exp();
        ((e - 1.0) / z, (e * (z - 1.0) + 1.0) / (z * z))
    }
}

/// Absorption spectrum `A(w) = 2 Re ∫_0^{t_max} e^{iwt - ηt} G_{g;t} dt`
/// sampled on `grid` (absolute frequencies).
///
/// `G` is sampled on a uniform time grid and interpolated linearly between
/// samples; the oscillatory factor is integrated exactly on each step, so
/// accuracy depends on how well `G` is sampled and not on `w`.
pub fn spectrum_finite_t(
    th: &ThermalParams,
    c: &Couplings,
    grid: &[f64],
    opts: &FiniteTemperatureOptions,
) -> Result<Vec<f64>> {
    let eta = opts.eta;
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::Domain {
            field: "eta",
            value: eta,
            reason: "damping rate must be positive",
        });
    }
    if grid.is_empty() || grid.iter().any(|w| !w.is_finite()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "frequency grid must be non-empty, finite and strictly increasing".into(),
        ));
    }
    let t_max = opts.t_max.unwrap_or(8.0 / eta);
    let product = t_max * eta;
    if product.is_nan() || product < 5.0 {
        return Err(Error::InsufficientDecay { product });
    }
    let step = opts.time_step.unwrap_or(TAU / (1000.0 * c.omega_g.max(c.omega_e)));
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::Domain {
            field: "time_step",
            value: step,
            reason: "must be positive",
        });
    }
    let steps = (t_max / step).ceil() as usize;
    let h = t_max / steps as f64;

    // Carrier e^{-iΩ_eg t} is removed from the samples and put back through
    // the frequency shift below.
    let linear = c.equal_frequencies();
    let samples: Vec<Complex64> = (0..=steps)
        .map(|j| {
            let t = j as f64 * h;
            let g = if linear {
                correlation_linear(th, c, t)?
            } else {
                correlation_quadratic(th, c, t)?
            };
            Ok(g.value * Complex64::cis(c.omega_eg * t))
        })
        .collect::<Result<_>>()?;

    Ok(grid
        .iter()
        .map(|&w| {
            let s = Complex64::new(-eta, w - c.omega_eg);
            let (i0, i1) = filon_weights(s * h);
            let advance = (s * h).exp();
            let mut carrier = Complex64::new(1.0, 0.0);
            let mut total = Complex64::new(0.0, 0.0);
            for pair in samples.windows(2) {
                total += carrier * (pair[0] * i0 + (pair[1] - pair[0]) * i1);
                carrier *= advance;
            }
            2.0 * (total * h).re
        })
        .collect())
}

/// Sum of Lorentzians `weight/2π · 2η / (η² + (w - Ω_eg - offset)²)`, the
/// infinite-time damped transform of a line list.
pub fn lorentzian_profile(lines: &[SpectralLine], omega_eg: f64, eta: f64, grid: &[f64]) -> Vec<f64> {
    grid.iter()
        .map(|&w| {
            lines
                .iter()
                .map(|l| {
                    let d = w - omega_eg - l.offset;
                    l.weight / TAU * 2.0 * eta / (eta * eta + d * d)
                })
                .sum()
        })
        .collect()
}
