//! Closed-form solution of the two-level system coupled to one phonon mode.
//!
//! Linear coupling (shift only) and quadratic coupling (frequency change)
//! are handled by the same formulas; the linear-limit functions are kept
//! separately because they are simpler and serve as cross-checks.

mod correlation;
mod dynamics;
mod overlap;
mod polaron;
pub mod series;
mod spectrum;
mod vacuum;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use correlation::{correlation_linear, correlation_quadratic, thermal_argument};
pub use dynamics::{
    excited_level_energy, excited_phonon_number, phonon_number_linear, phonon_number_quadratic,
    phonon_number_quadratic_expanded,
};
pub use overlap::{
    generating_function, overlap_linear, overlap_quadratic, tilde_coefficients, tilde_coefficients_series, tilde_zero,
    DEGENERATE_DENOMINATOR_TOL, POLE_TOL,
};
pub use polaron::polaron_state_check;
pub use spectrum::{
    lorentzian_profile, spectrum_finite_t, spectrum_zero_t, spectrum_zero_t_auto, FiniteTemperatureOptions,
    LINEAR_BRANCH_TOL, SUM_RULE_TOL, WEIGHT_IMAG_TOL,
};
pub use vacuum::{vacuum_expansion_linear, vacuum_ground_phonon_number};

/// `<p_g|p_{g;t}>`, the amplitude for the phonons to remain in `|p_g>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OverlapValue {
    pub p: usize,
    pub t: f64,
    pub value: Complex64,
}

impl OverlapValue {
    pub fn probability(&self) -> f64 {
        self.value.norm_sqr()
    }
}

/// Dipole correlation function `G_{g;t}` at one time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSample {
    pub t: f64,
    pub value: Complex64,
}

/// One delta line of the absorption spectrum, `weight · δ(w - Ω_eg - offset)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralLine {
    pub offset: f64,
    pub weight: f64,
}
