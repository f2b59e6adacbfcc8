//! Shared inputs for the benchmarks in `benches/`.

use vibronic::{derive_couplings, Couplings, ModelParams, Preset};

/// Couplings of the three figure presets, labelled by preset name.
pub fn figure_couplings() -> Vec<(&'static str, ModelParams, Couplings)> {
    Preset::FIGURE
        .iter()
        .map(|p| {
            let params = p.params();
            (
                p.name(),
                params,
                derive_couplings(&params).expect("preset parameters are valid"),
            )
        })
        .collect()
}

/// `n` times spanning two periods of the excited-level oscillator.
pub fn time_grid(omega_e: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| 4.0 * std::f64::consts::PI * k as f64 / (n as f64 * omega_e))
        .collect()
}
