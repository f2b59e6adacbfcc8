//! Two-level electronic system coupled to one harmonic phonon mode whose
//! equilibrium position (linear coupling) and frequency (quadratic coupling)
//! depend on the electronic level.
//!
//! [`analytic`] evaluates the closed-form overlaps, phonon numbers, thermal
//! correlation functions and absorption spectra. [`oracle`] recomputes the
//! same observables by brute force in a truncated Fock basis and is used to
//! validate the closed forms.

pub mod analytic;
pub mod error;
pub mod model;
pub mod oracle;
pub mod presets;
pub mod specfun;

pub use analytic::{CorrelationSample, OverlapValue, SpectralLine};
pub use error::{Error, Result};
pub use model::{derive_couplings, time_coeffs, Couplings, ModelParams, ThermalParams, TimeCoeffs};
pub use presets::Preset;

pub use num_complex::Complex64;
