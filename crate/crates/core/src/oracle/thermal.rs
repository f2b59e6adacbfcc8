use std::f64::consts::TAU;

use num_complex::Complex64;

use super::hamiltonian::{build_excited_hamiltonian, Propagator};
use super::operators::TruncatedBasis;
use super::{buffer_levels, BOLTZMANN_CUTOFF, BUFFER_POPULATION_TOL};
use crate::analytic::CorrelationSample;
use crate::error::{Error, Result};
use crate::model::{derive_couplings, ModelParams, ThermalParams};

/// One transition `|p_g> -> |k_e>` of the numerically diagonalized model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleLine {
    /// Transition frequency minus the electronic gap Ω_eg.
    pub offset: f64,
    /// Boltzmann-weighted Franck-Condon factor times 2π.
    pub weight: f64,
    pub initial: usize,
    pub target: usize,
}

struct Diagonalized {
    propagator: Propagator,
    /// `sqrt` of each eigenvector's population in the buffer zone.
    buffer_amplitudes: Vec<f64>,
}

impl Diagonalized {
    fn new(params: &ModelParams, basis: &TruncatedBasis) -> Result<Self> {
        let h = build_excited_hamiltonian(params, basis)?;
        let propagator = Propagator::new(&h)?;
        let n = basis.dim();
        let buffer = buffer_levels(n);
        let vectors = propagator.eigenvectors();
        let buffer_amplitudes = (0..n)
            .map(|k| (n - buffer..n).map(|i| vectors[(i, k)].norm_sqr()).sum::<f64>().sqrt())
            .collect();
        Ok(Self {
            propagator,
            buffer_amplitudes,
        })
    }

    /// Time-independent upper bound on the buffer population reached by
    /// `e^{-iHt}|p>`, weighted by `weight`.
    fn check_initial(&self, p: usize, weight: f64) -> Result<()> {
        let vectors = self.propagator.eigenvectors();
        let amplitude: f64 = (0..self.propagator.dim())
            .map(|k| vectors[(p, k)].norm() * self.buffer_amplitudes[k])
            .sum();
        let population = weight * amplitude * amplitude;
        if population > BUFFER_POPULATION_TOL {
            let dim = self.propagator.dim();
            return Err(Error::Truncation {
                dim,
                buffer: buffer_levels(dim),
                population,
            });
        }
        Ok(())
    }

    fn franck_condon_row(&self, p: usize) -> Vec<f64> {
        let vectors = self.propagator.eigenvectors();
        (0..self.propagator.dim()).map(|k| vectors[(p, k)].norm_sqr()).collect()
    }
}

fn thermal_weights(th: &ThermalParams, omega_g: f64, dim: usize) -> Result<Vec<f64>> {
    let weights = th.boltzmann_weights(omega_g, BOLTZMANN_CUTOFF);
    if weights.len() > dim {
        return Err(Error::InvalidArgument(format!(
            "thermal sum needs {} Fock states but the basis has dimension {dim}",
            weights.len()
        )));
    }
    Ok(weights)
}

/// `<p_g| e^{-i(H_e - ε_e)t} |p_g>` on a time grid.
pub fn return_overlaps(
    params: &ModelParams,
    basis: &TruncatedBasis,
    p: usize,
    times: &[f64],
) -> Result<Vec<Complex64>> {
    let diag = Diagonalized::new(params, basis)?;
    diag.check_initial(p, 1.0)?;
    let initial = basis.fock(p)?;
    let amplitudes = diag.propagator.return_amplitudes(&initial, times)?;
    Ok(amplitudes
        .into_iter()
        .zip(times)
        .map(|(a, &t)| a * Complex64::cis(params.epsilon_e * t))
        .collect())
}

/// Thermally averaged dipole correlation function evaluated by brute force:
/// `Σ_p w_p e^{-iΩ_eg t} e^{iω_g t (p + 1/2)} <p_g|e^{-i(H_e - ε_e)t}|p_g>`.
pub fn thermal_correlation(
    params: &ModelParams,
    th: &ThermalParams,
    basis: &TruncatedBasis,
    t_grid: &[f64],
) -> Result<Vec<CorrelationSample>> {
    let c = derive_couplings(params)?;
    let weights = thermal_weights(th, c.omega_g, basis.dim())?;
    let diag = Diagonalized::new(params, basis)?;
    let energies: Vec<f64> = diag
        .propagator
        .eigenvalues()
        .iter()
        .map(|e| e - params.epsilon_e)
        .collect();

    let mut values = vec![Complex64::new(0.0, 0.0); t_grid.len()];
    for (p, &w) in weights.iter().enumerate() {
        diag.check_initial(p, w)?;
        let fc = diag.franck_condon_row(p);
        let ground = c.omega_g * (p as f64 + 0.5);
        for (value, &t) in values.iter_mut().zip(t_grid) {
            let overlap: Complex64 = fc
                .iter()
                .zip(&energies)
                .map(|(&f, &e)| f * Complex64::cis((ground - e) * t))
                .sum();
            *value += w * overlap;
        }
    }
    Ok(values
        .into_iter()
        .zip(t_grid)
        .map(|(v, &t)| CorrelationSample {
            t,
            value: v * Complex64::cis(-c.omega_eg * t),
        })
        .collect())
}

/// Every absorption line of the truncated model at temperature `th`.
pub fn thermal_line_list(params: &ModelParams, th: &ThermalParams, basis: &TruncatedBasis) -> Result<Vec<OracleLine>> {
    let c = derive_couplings(params)?;
    let weights = thermal_weights(th, c.omega_g, basis.dim())?;
    let diag = Diagonalized::new(params, basis)?;
    let mut lines = Vec::new();
    for (p, &w) in weights.iter().enumerate() {
        diag.check_initial(p, w)?;
        let ground = c.omega_g * (p as f64 + 0.5);
        for (k, f) in diag.franck_condon_row(p).into_iter().enumerate() {
            lines.push(OracleLine {
                offset: diag.propagator.eigenvalues()[k] - params.epsilon_e - ground,
                weight: TAU * w * f,
                initial: p,
                target: k,
            });
        }
    }
    Ok(lines)
}

/// `|<0_g|n_e>|^2` for the excited-level eigenstates in ascending energy.
pub fn franck_condon_weights(params: &ModelParams, basis: &TruncatedBasis) -> Result<Vec<f64>> {
    let diag = Diagonalized::new(params, basis)?;
    diag.check_initial(0, 1.0)?;
    Ok(diag.franck_condon_row(0))
}
