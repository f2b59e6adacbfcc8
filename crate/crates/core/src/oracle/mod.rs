//! Brute-force reference solver in a truncated ground-phonon Fock basis.
//!
//! Everything here is computed by assembling dense matrices, diagonalizing
//! and propagating numerically. None of it uses the closed forms of
//! [`crate::analytic`], which is what makes it usable as an oracle for them.

mod convergence;
mod hamiltonian;
mod operators;
mod thermal;

pub use convergence::{convergence_sweep, SweepQuantity, SweepRow};
pub use hamiltonian::{build_excited_hamiltonian, evolve, excited_vacuum, Propagator};
pub use operators::{observable, OperatorMatrix, OracleState, TruncatedBasis};
pub use thermal::{franck_condon_weights, return_overlaps, thermal_correlation, thermal_line_list, OracleLine};

/// Population allowed in the buffer zone at the top of the basis.
pub const BUFFER_POPULATION_TOL: f64 = 1e-8;

/// Boltzmann weights below this are dropped from thermal sums.
pub const BOLTZMANN_CUTOFF: f64 = 1e-12;

/// Number of top basis levels treated as a truncation buffer.
pub fn buffer_levels(dim: usize) -> usize {
    (dim / 8).max(1)
}
