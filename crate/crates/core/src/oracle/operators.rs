use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{buffer_levels, BUFFER_POPULATION_TOL};
use crate::error::{Error, Result};

/// Maximum entry of `A - A^H` tolerated for operators treated as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-13;

/// Imaginary residue tolerated in an expectation value of a Hermitian operator.
pub const EXPECTATION_IMAG_TOL: f64 = 1e-10;

/// Fock states `|0>, ..., |dim - 1>` of the ground-level oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedBasis {
    dim: usize,
}

impl TruncatedBasis {
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidArgument(format!(
                "basis dimension must be at least 2, got {dim}"
            )));
        }
        Ok(Self { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `b` with `b[p-1, p] = sqrt(p)`.
    pub fn annihilation(&self) -> OperatorMatrix {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for p in 1..self.dim {
            m[(p - 1, p)] = Complex64::new((p as f64).sqrt(), 0.0);
        }
        OperatorMatrix { matrix: m }
    }

    pub fn creation(&self) -> OperatorMatrix {
        self.annihilation().adjoint()
    }

    pub fn number(&self) -> OperatorMatrix {
        OperatorMatrix {
            matrix: DMatrix::from_fn(self.dim, self.dim, |i, j| {
                if i == j {
                    Complex64::new(i as f64, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }),
        }
    }

    pub fn identity(&self) -> OperatorMatrix {
        OperatorMatrix {
            matrix: DMatrix::identity(self.dim, self.dim),
        }
    }

    /// `b + b^†`.
    pub fn quadrature(&self) -> OperatorMatrix {
        let b = self.annihilation();
        OperatorMatrix {
            matrix: &b.matrix + b.matrix.adjoint(),
        }
    }

    /// `(b + b^†)^2 = b^2 + b^†2 + 2 b^†b + 1`, assembled entrywise so the
    /// last diagonal element does not lose the term that truncation would
    /// cut from a product of truncated matrices.
    pub fn quadrature_squared(&self) -> OperatorMatrix {
        let n = self.dim;
        let mut m = DMatrix::zeros(n, n);
        for p in 0..n {
            m[(p, p)] = Complex64::new(2.0 * p as f64 + 1.0, 0.0);
            if p + 2 < n {
                let v = (((p + 1) * (p + 2)) as f64).sqrt();
                m[(p, p + 2)] = Complex64::new(v, 0.0);
                m[(p + 2, p)] = Complex64::new(v, 0.0);
            }
        }
        OperatorMatrix { matrix: m }
    }

    pub fn fock(&self, p: usize) -> Result<OracleState> {
        if p >= self.dim {
            return Err(Error::InvalidArgument(format!(
                "Fock state {p} outside basis of dimension {}",
                self.dim
            )));
        }
        let mut amplitudes = DVector::zeros(self.dim);
        amplitudes[p] = Complex64::new(1.0, 0.0);
        Ok(OracleState { amplitudes })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    pub matrix: DMatrix<Complex64>,
}

impl OperatorMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn require_hermitian(&self) -> Result<()> {
        if self.matrix.nrows() != self.matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.matrix.nrows(),
                found: self.matrix.ncols(),
            });
        }
        let deviation = self.hermiticity_deviation();
        if deviation < HERMITIAN_TOL {
            Ok(())
        } else {
            Err(Error::NonHermitian { deviation })
        }
    }

    pub fn apply(&self, state: &OracleState) -> Result<OracleState> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: state.dim(),
            });
        }
        Ok(OracleState {
            amplitudes: &self.matrix * &state.amplitudes,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleState {
    pub amplitudes: DVector<Complex64>,
}

impl OracleState {
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &OracleState) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn populations(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Population in the top `levels` basis states.
    pub fn top_population(&self, levels: usize) -> f64 {
        let n = self.dim();
        self.amplitudes
            .iter()
            .skip(n.saturating_sub(levels))
            .map(|a| a.norm_sqr())
            .sum()
    }

    /// Fails when more than [`BUFFER_POPULATION_TOL`] of the state sits in
    /// the buffer zone at the top of the basis.
    pub fn check_truncation(&self) -> Result<()> {
        let buffer = buffer_levels(self.dim());
        let population = self.top_population(buffer);
        if population > BUFFER_POPULATION_TOL {
            return Err(Error::Truncation {
                dim: self.dim(),
                buffer,
                population,
            });
        }
        Ok(())
    }
}

/// `<state|op|state>` for a Hermitian operator.
pub fn observable(state: &OracleState, op: &OperatorMatrix) -> Result<f64> {
    op.require_hermitian()?;
    let value = state.inner(&op.apply(state)?);
    if value.im.abs() > EXPECTATION_IMAG_TOL {
        return Err(Error::ComplexResidue {
            what: "expectation value",
            residue: value.im.abs(),
        });
    }
    Ok(value.re)
}
