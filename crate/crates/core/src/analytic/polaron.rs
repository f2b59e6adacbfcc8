use nalgebra::DVector;
use num_complex::Complex64;

use super::vacuum::vacuum_expansion_linear;
use crate::error::Result;
use crate::oracle::{OperatorMatrix, OracleState, Propagator, TruncatedBasis};

/// Norm distance between the displaced Fock state `e^{Λ(b^† - b)} |p_g>`
/// and the excited-phonon state `(b^† - Λ)^p / sqrt(p!) |0_e>` built from
/// the vacuum expansion and truncated to ground phonons `0..=p_max`.
///
/// The displacement is exponentiated numerically in a basis large enough
/// that its truncation does not reach the compared components.
pub fn polaron_state_check(p: usize, lambda: f64, p_max: usize) -> Result<f64> {
    let kept = p_max + 1;
    let work_dim = 2 * kept + p + 16 + (8.0 * lambda * lambda).ceil() as usize;
    let basis = TruncatedBasis::new(work_dim)?;

    // e^{Λ(b^† - b)} = e^{-iH} with H = iΛ(b^† - b) Hermitian.
    let b = basis.annihilation().matrix;
    let generator = OperatorMatrix {
        matrix: (b.adjoint() - &b).scale(lambda) * Complex64::new(0.0, 1.0),
    };
    let displaced = Propagator::new(&generator)?.evolve(&basis.fock(p)?, 1.0)?;

    // |p_e> = (b^† - Λ)^p |0_e> / sqrt(p!) applied to the truncated vacuum;
    // components up to p_max only involve vacuum components up to p_max.
    let mut state: Vec<f64> = vacuum_expansion_linear(lambda, p_max);
    state.resize(kept + p, 0.0);
    for k in 0..p {
        let mut raised = vec![0.0; state.len()];
        for q in 0..state.len() {
            if q + 1 < state.len() {
                raised[q + 1] += ((q + 1) as f64).sqrt() * state[q];
            }
            raised[q] -= lambda * state[q];
        }
        state = raised.into_iter().map(|a| a / ((k + 1) as f64).sqrt()).collect();
    }

    let excited = OracleState {
        amplitudes: DVector::from_iterator(kept, state.iter().take(kept).map(|&a| Complex64::new(a, 0.0))),
    };
    let residual: f64 = (0..work_dim)
        .map(|q| {
            let truncated = if q < kept {
                excited.amplitudes[q]
            } else {
                Complex64::new(0.0, 0.0)
            };
            (displaced.amplitudes[q] - truncated).norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    Ok(residual)
}
