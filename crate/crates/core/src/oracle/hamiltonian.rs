use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::operators::{OperatorMatrix, OracleState, TruncatedBasis};
use crate::error::{Error, Result};
use crate::model::{derive_couplings, ModelParams};

/// Largest `|b_e v|^2` accepted for the numerically found excited vacuum.
/// Truncation itself is policed by the buffer-zone check.
pub const VACUUM_RESIDUAL_TOL: f64 = 1e-6;

/// Excited-level Hamiltonian written with ground phonons,
/// `ε'_e + ω_g (b^†b + 1/2) - ω_e (λ1 (b + b^†) + λ2 (b + b^†)^2)`.
pub fn build_excited_hamiltonian(params: &ModelParams, basis: &TruncatedBasis) -> Result<OperatorMatrix> {
    let c = derive_couplings(params)?;
    let n = basis.dim();
    let number = basis.number().matrix;
    let x = basis.quadrature().matrix;
    let x2 = basis.quadrature_squared().matrix;
    let identity = DMatrix::<Complex64>::identity(n, n);

    let matrix = identity.scale(c.epsilon_e_prime + 0.5 * c.omega_g) + number.scale(c.omega_g)
        - x.scale(c.omega_e * c.lambda1)
        - x2.scale(c.omega_e * c.lambda2);
    Ok(OperatorMatrix { matrix })
}

/// Eigendecomposition of a Hermitian operator, reusable for propagation at
/// many times.
#[derive(Debug, Clone)]
pub struct Propagator {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl Propagator {
    pub fn new(h: &OperatorMatrix) -> Result<Self> {
        h.require_hermitian()?;
        // Real symmetric input is diagonalized in real arithmetic.
        let real = h.matrix.iter().all(|z| z.im == 0.0);
        let (values, vectors) = if real {
            let eig = SymmetricEigen::new(h.matrix.map(|z| z.re));
            (eig.eigenvalues, eig.eigenvectors.map(|v| Complex64::new(v, 0.0)))
        } else {
            let eig = SymmetricEigen::new(h.matrix.clone());
            (eig.eigenvalues, eig.eigenvectors)
        };

        // Sort ascending.
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let eigenvalues = DVector::from_iterator(order.len(), order.iter().map(|&k| values[k]));
        let eigenvectors = DMatrix::from_fn(vectors.nrows(), order.len(), |i, j| vectors[(i, order[j])]);
        Ok(Self {
            eigenvalues,
            eigenvectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    /// Column `k` is the eigenvector of the `k`-th eigenvalue.
    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, k: usize) -> OracleState {
        OracleState {
            amplitudes: self.eigenvectors.column(k).into_owned(),
        }
    }

    /// `U e^{-iEt} U^† ψ`.
    pub fn evolve(&self, initial: &OracleState, t: f64) -> Result<OracleState> {
        if initial.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: initial.dim(),
            });
        }
        let mut coeffs = self.eigenvectors.adjoint() * &initial.amplitudes;
        for (c, &e) in coeffs.iter_mut().zip(self.eigenvalues.iter()) {
            *c *= Complex64::cis(-e * t);
        }
        Ok(OracleState {
            amplitudes: &self.eigenvectors * coeffs,
        })
    }

    /// `<ψ|e^{-iHt}|ψ>` for every `t`, from a single projection onto the
    /// eigenbasis.
    pub fn return_amplitudes(&self, state: &OracleState, times: &[f64]) -> Result<Vec<Complex64>> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: state.dim(),
            });
        }
        let weights: Vec<f64> = (self.eigenvectors.adjoint() * &state.amplitudes)
            .iter()
            .map(|c| c.norm_sqr())
            .collect();
        Ok(times
            .iter()
            .map(|&t| {
                weights
                    .iter()
                    .zip(self.eigenvalues.iter())
                    .map(|(&w, &e)| w * Complex64::cis(-e * t))
                    .sum()
            })
            .collect())
    }
}

pub fn evolve(h: &OperatorMatrix, initial: &OracleState, t: f64) -> Result<OracleState> {
    Propagator::new(h)?.evolve(initial, t)
}

/// Normalized null vector of `b_e = γ+ b_g + γ- b_g^† - Λ_e`, with the phase
/// chosen so that its leading non-negligible amplitude is real and positive.
pub fn excited_vacuum(params: &ModelParams, basis: &TruncatedBasis) -> Result<OracleState> {
    let c = derive_couplings(params)?;
    let n = basis.dim();
    let b = basis.annihilation().matrix;
    let b_e = b.scale(c.gamma_plus) + b.adjoint().scale(c.gamma_minus)
        - DMatrix::<Complex64>::identity(n, n).scale(c.lambda_e);
    let gram = OperatorMatrix {
        matrix: b_e.adjoint() * &b_e,
    };
    let eig = Propagator::new(&gram)?;
    let residual = eig.eigenvalues()[0];
    if residual.abs() > VACUUM_RESIDUAL_TOL {
        return Err(Error::IllConditioned { dim: n, residual });
    }

    let mut state = eig.eigenvector(0);
    if let Some(lead) = state.amplitudes.iter().copied().find(|a| a.norm() > 1e-8) {
        let phase = lead.conj() / lead.norm();
        state.amplitudes.iter_mut().for_each(|a| *a *= phase);
    }
    state.check_truncation()?;
    Ok(state)
}
