use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid {field} = {value}: {reason}")]
    Domain {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{operation} requires equal ground and excited frequencies (omega_g = {omega_g}, omega_e = {omega_e})")]
    UnequalFrequencies {
        operation: &'static str,
        omega_g: f64,
        omega_e: f64,
    },

    #[error("generating function pole: x = {x} lies {distance:e} from the singularity {singularity}")]
    Pole {
        x: Complex64,
        singularity: Complex64,
        distance: f64,
    },

    #[error("generating function diverges: |x| = {modulus} is not inside the convergence radius {radius}")]
    Divergence { x: Complex64, modulus: f64, radius: f64 },

    #[error("thermal correlation at beta = {beta}, t = {t}: {source}")]
    Thermal {
        beta: f64,
        t: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("matrix is not Hermitian: max |A - A^H| = {deviation:e}")]
    NonHermitian { deviation: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("excited vacuum is ill-conditioned at dim {dim}: smallest eigenvalue of b_e^H b_e is {residual:e}")]
    IllConditioned { dim: usize, residual: f64 },

    #[error("truncation contamination at dim {dim}: population {population:e} in the top {buffer} levels")]
    Truncation { dim: usize, buffer: usize, population: f64 },

    #[error("non-monotone convergence at dim {dim}: delta {delta:e} after {previous:e}")]
    NonMonotone { dim: usize, delta: f64, previous: f64 },

    #[error("{what} has imaginary residue {residue:e}")]
    ComplexResidue { what: &'static str, residue: f64 },

    #[error("line list captured only {captured} of the total weight after {lines} lines")]
    LineBudget { lines: usize, captured: f64 },

    #[error("insufficient decay: t_max * eta = {product} < 5")]
    InsufficientDecay { product: f64 },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors caused by a pole or divergence of a closed-form expression.
    pub fn is_numerical_domain(&self) -> bool {
        match self {
            Error::Pole { .. } | Error::Divergence { .. } => true,
            Error::Thermal { source, .. } => source.is_numerical_domain(),
            _ => false,
        }
    }
}
