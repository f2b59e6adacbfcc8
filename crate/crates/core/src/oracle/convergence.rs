use num_complex::Complex64;

use super::hamiltonian::{build_excited_hamiltonian, excited_vacuum, Propagator};
use super::operators::{observable, TruncatedBasis};
use super::thermal::return_overlaps;
use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Deltas below this are treated as converged to rounding and exempt from
/// the monotonicity check.
pub const SWEEP_NOISE_FLOOR: f64 = 1e-12;

/// Observables the truncation sweep knows how to compute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepQuantity {
    /// `|<p_g|p_{g;t}>|^2`.
    OverlapSquared { p: usize, t: f64 },
    /// `<0_e|b_g^† b_g|0_e>`.
    VacuumGroundPhononNumber,
    /// The `n`-th lowest eigenvalue of the excited-level Hamiltonian.
    Eigenvalue { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub dim: usize,
    pub value: f64,
    /// `|value - previous value|`; NaN for the first row.
    pub delta: f64,
}

fn evaluate(quantity: SweepQuantity, params: &ModelParams, dim: usize) -> Result<f64> {
    let basis = TruncatedBasis::new(dim)?;
    match quantity {
        SweepQuantity::OverlapSquared { p, t } => {
            let overlap: Complex64 = return_overlaps(params, &basis, p, &[t])?[0];
            Ok(overlap.norm_sqr())
        }
        SweepQuantity::VacuumGroundPhononNumber => {
            let vac = excited_vacuum(params, &basis)?;
            observable(&vac, &basis.number())
        }
        SweepQuantity::Eigenvalue { n } => {
            let prop = Propagator::new(&build_excited_hamiltonian(params, &basis)?)?;
            prop.eigenvalues()
                .get(n)
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("eigenvalue {n} outside basis of dimension {dim}")))
        }
    }
}

/// Evaluates `quantity` for each truncation in `dims` and checks that the
/// successive differences shrink. The final delta is the oracle's error bar.
pub fn convergence_sweep(quantity: SweepQuantity, params: &ModelParams, dims: &[usize]) -> Result<Vec<SweepRow>> {
    if dims.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "sweep dimensions must be strictly increasing".into(),
        ));
    }
    let mut rows: Vec<SweepRow> = Vec::with_capacity(dims.len());
    for &dim in dims {
        let value = evaluate(quantity, params, dim)?;
        let delta = rows.last().map_or(f64::NAN, |prev| (value - prev.value).abs());
        if let Some(prev) = rows.last() {
            if !prev.delta.is_nan() && delta > SWEEP_NOISE_FLOOR && delta > prev.delta {
                return Err(Error::NonMonotone {
                    dim,
                    delta,
                    previous: prev.delta,
                });
            }
        }
        rows.push(SweepRow { dim, value, delta });
    }
    Ok(rows)
}
