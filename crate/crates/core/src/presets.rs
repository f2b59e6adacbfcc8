//! Named parameter sets for the three phonon configurations compared in the
//! reference figure, plus an uncoupled control.
//!
//! All presets use `ε_g = ε_e = 0`, `ω_g = 1` and `β ω_e = 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::model::{ModelParams, ThermalParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Shift only: `ω_e = ω_g`, `Λ = 1`.
    Fig2Linear,
    /// Frequency change only: `ω_e = 2ω_g`, `Λ_g = 0`.
    Fig2Quadratic,
    /// Both: `ω_e = 2ω_g`, `Λ_g = 1`.
    Fig2Both,
    ZeroCoupling,
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::Fig2Linear,
        Preset::Fig2Quadratic,
        Preset::Fig2Both,
        Preset::ZeroCoupling,
    ];

    pub const FIGURE: [Preset; 3] = [Preset::Fig2Linear, Preset::Fig2Quadratic, Preset::Fig2Both];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig2Linear => "fig2-linear",
            Preset::Fig2Quadratic => "fig2-quadratic",
            Preset::Fig2Both => "fig2-both",
            Preset::ZeroCoupling => "zero-coupling",
        }
    }

    /// `(ω_g, ω_e, Λ_g)`.
    pub fn frequencies_and_shift(self) -> (f64, f64, f64) {
        match self {
            Preset::Fig2Linear => (1.0, 1.0, 1.0),
            Preset::Fig2Quadratic => (1.0, 2.0, 0.0),
            Preset::Fig2Both => (1.0, 2.0, 1.0),
            Preset::ZeroCoupling => (1.0, 1.0, 0.0),
        }
    }

    pub fn params(self) -> ModelParams {
        let (omega_g, omega_e, lambda_g) = self.frequencies_and_shift();
        ModelParams::from_lambda_g(0.0, 0.0, omega_g, omega_e, lambda_g).expect("preset parameters are valid")
    }

    /// Thermal state with `β ω_e = 1`.
    pub fn thermal(self) -> ThermalParams {
        let (_, omega_e, _) = self.frequencies_and_shift();
        ThermalParams { beta: 1.0 / omega_e }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let known: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
            Error::InvalidArgument(format!("unknown preset `{s}` (known: {})", known.join(", ")))
        })
    }
}
