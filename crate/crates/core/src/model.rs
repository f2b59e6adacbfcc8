//! Model parameters and the dimensionless couplings derived from them.
//!
//! Units are fixed to ħ = 1 and m = 1. The ground-level oscillator has
//! frequency `omega_g` centered at the origin, the excited-level oscillator
//! has frequency `omega_e` centered at `shift_l`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Frequencies closer than this (relative) are treated as equal when an
/// operation is only defined for the linear-coupling limit.
pub const EQUAL_FREQUENCY_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub epsilon_g: f64,
    pub epsilon_e: f64,
    pub omega_g: f64,
    pub omega_e: f64,
    pub shift_l: f64,
}

impl ModelParams {
    pub fn new(epsilon_g: f64, epsilon_e: f64, omega_g: f64, omega_e: f64, shift_l: f64) -> Result<Self> {
        let params = Self {
            epsilon_g,
            epsilon_e,
            omega_g,
            omega_e,
            shift_l,
        };
        params.validate()?;
        Ok(params)
    }

    /// Builds parameters from the ground-level dimensionless shift
    /// `Λ_g = l sqrt(ω_g / 2)` instead of the shift length.
    pub fn from_lambda_g(epsilon_g: f64, epsilon_e: f64, omega_g: f64, omega_e: f64, lambda_g: f64) -> Result<Self> {
        check_frequency("omega_g", omega_g)?;
        check_finite("lambda_g", lambda_g)?;
        Self::new(
            epsilon_g,
            epsilon_e,
            omega_g,
            omega_e,
            lambda_g * (2.0 / omega_g).sqrt(),
        )
    }

    pub fn validate(&self) -> Result<()> {
        check_finite("epsilon_g", self.epsilon_g)?;
        check_finite("epsilon_e", self.epsilon_e)?;
        check_frequency("omega_g", self.omega_g)?;
        check_frequency("omega_e", self.omega_e)?;
        check_finite("shift_l", self.shift_l)
    }

    pub fn equal_frequencies(&self) -> bool {
        (self.omega_e - self.omega_g).abs() <= EQUAL_FREQUENCY_RTOL * self.omega_g.max(self.omega_e)
    }
}

fn check_finite(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            field,
            value,
            reason: "must be finite",
        })
    }
}

fn check_frequency(field: &'static str, value: f64) -> Result<()> {
    check_finite(field, value)?;
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            field,
            value,
            reason: "frequency must be positive",
        })
    }
}

/// Dimensionless constants shared by every closed-form expression.
///
/// `gamma_plus` and `gamma_minus` are the Bogoliubov coefficients linking
/// the two phonon bases, `lambda_g`/`lambda_e` the shift measured in the
/// ground/excited oscillator length, and `lambda1`/`lambda2` the linear and
/// quadratic coupling constants of the Hamiltonian written with ground
/// phonons only. The two frequencies are carried along so that time
/// dependent quantities can be evaluated from a `Couplings` value alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub lambda_g: f64,
    pub lambda_e: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub omega_eg: f64,
    pub epsilon_e_prime: f64,
    pub omega_g: f64,
    pub omega_e: f64,
}

pub fn derive_couplings(params: &ModelParams) -> Result<Couplings> {
    params.validate()?;
    let ModelParams {
        epsilon_g,
        epsilon_e,
        omega_g,
        omega_e,
        shift_l,
    } = *params;

    let ratio_eg = (omega_e / omega_g).sqrt();
    let ratio_ge = (omega_g / omega_e).sqrt();
    let lambda_g = shift_l * (omega_g / 2.0).sqrt();
    let lambda_e = shift_l * (omega_e / 2.0).sqrt();

    Ok(Couplings {
        gamma_plus: 0.5 * (ratio_eg + ratio_ge),
        gamma_minus: 0.5 * (ratio_eg - ratio_ge),
        lambda_g,
        lambda_e,
        lambda1: lambda_e * ratio_eg,
        lambda2: (omega_g * omega_g - omega_e * omega_e) / (4.0 * omega_e * omega_g),
        omega_eg: epsilon_e - epsilon_g,
        epsilon_e_prime: epsilon_e + omega_e * lambda_e * lambda_e,
        omega_g,
        omega_e,
    })
}

impl Couplings {
    /// Squared ground-level shift, the Huang-Rhys factor.
    pub fn huang_rhys(&self) -> f64 {
        self.lambda_g * self.lambda_g
    }

    /// True when the quadratic coupling is absent to within `tol`.
    pub fn is_linear(&self, tol: f64) -> bool {
        self.gamma_minus.abs() < tol
    }

    pub fn equal_frequencies(&self) -> bool {
        (self.omega_e - self.omega_g).abs() <= EQUAL_FREQUENCY_RTOL * self.omega_g.max(self.omega_e)
    }

    pub(crate) fn require_equal_frequencies(&self, operation: &'static str) -> Result<()> {
        if self.equal_frequencies() {
            Ok(())
        } else {
            Err(Error::UnequalFrequencies {
                operation,
                omega_g: self.omega_g,
                omega_e: self.omega_e,
            })
        }
    }
}

/// Time-dependent coefficients at one instant.
///
/// `lam_t` is the linear-limit coefficient `Λ_g (1 - e^{iω_e t})`. The
/// primed triple describes how `b_g` is transported through the excited
/// level evolution; the unprimed tilde triple carries an extra
/// `e^{-iω_e t}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeCoeffs {
    pub t: f64,
    pub lam_t: Complex64,
    pub d_tilde_prime: Complex64,
    pub q_tilde_prime: Complex64,
    pub lam_tilde_prime: Complex64,
    pub d_tilde: Complex64,
    pub q_tilde: Complex64,
    pub lam_tilde: Complex64,
}

pub fn time_coeffs(c: &Couplings, t: f64) -> Result<TimeCoeffs> {
    if !t.is_finite() {
        return Err(Error::Domain {
            field: "t",
            value: t,
            reason: "time must be finite",
        });
    }
    let phase = c.omega_e * t;
    let e1 = Complex64::cis(phase);
    let e2 = Complex64::cis(2.0 * phase);
    let back = Complex64::cis(-phase);
    let (gp, gm) = (c.gamma_plus, c.gamma_minus);

    let d_prime = gp * gp - gm * gm * e2;
    let q_prime = gp * gm * (1.0 - e2);
    let lam_prime = c.lambda_e * (gp - gm * e2) - c.lambda_g * e1;

    Ok(TimeCoeffs {
        t,
        lam_t: c.lambda_g * (1.0 - e1),
        d_tilde_prime: d_prime,
        q_tilde_prime: q_prime,
        lam_tilde_prime: lam_prime,
        d_tilde: d_prime * back,
        q_tilde: q_prime * back,
        lam_tilde: lam_prime * back,
    })
}

/// Thermal state of the phonon bath; `beta = +inf` encodes zero temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalParams {
    pub beta: f64,
}

impl ThermalParams {
    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_nan() || beta <= 0.0 {
            return Err(Error::Domain {
                field: "beta",
                value: beta,
                reason: "inverse temperature must be positive (use +inf for T = 0)",
            });
        }
        Ok(Self { beta })
    }

    pub fn zero_temperature() -> Self {
        Self { beta: f64::INFINITY }
    }

    pub fn is_zero_temperature(&self) -> bool {
        self.beta == f64::INFINITY
    }

    /// `e^{-βω}`, exactly zero at T = 0.
    pub fn boltzmann_ratio(&self, omega: f64) -> f64 {
        if self.is_zero_temperature() {
            0.0
        } else {
            (-self.beta * omega).exp()
        }
    }

    /// Partition function of a single mode, `(1 - e^{-βω})^{-1}`.
    pub fn partition(&self, omega: f64) -> f64 {
        1.0 / (1.0 - self.boltzmann_ratio(omega))
    }

    /// Mean occupation `(e^{βω} - 1)^{-1}`.
    pub fn mean_occupation(&self, omega: f64) -> f64 {
        if self.is_zero_temperature() {
            0.0
        } else {
            1.0 / (self.beta * omega).exp_m1()
        }
    }

    /// Normalized Boltzmann weights `e^{-βωp}/Z` for p = 0, 1, ... until the
    /// weight drops below `cutoff`.
    pub fn boltzmann_weights(&self, omega: f64, cutoff: f64) -> Vec<f64> {
        let ratio = self.boltzmann_ratio(omega);
        let z = self.partition(omega);
        let mut weights = vec![1.0 / z];
        if ratio == 0.0 {
            return weights;
        }
        loop {
            let next = weights[weights.len() - 1] * ratio;
            if next < cutoff {
                break;
            }
            weights.push(next);
        }
        weights
    }
}
