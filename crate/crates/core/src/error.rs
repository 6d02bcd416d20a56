use thiserror::Error;

/// Errors raised by the stability pipeline and its oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix polynomial has no coefficients")]
    EmptyPolynomial,
    #[error("coefficient {index} has shape {rows}x{cols}, expected {expected}x{expected}")]
    ShapeMismatch {
        index: usize,
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("coefficient {index} contains a non-finite entry")]
    NonFinite { index: usize },
    #[error("column {column} is identically zero (polynomial is not regular)")]
    ZeroColumn { column: usize },
    #[error("invalid column degrees: {0}")]
    InvalidColumnDegrees(String),
    #[error("polynomial is not column reduced (hcdc condition number {condition:e})")]
    NotColumnReduced { condition: f64 },
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("leading column-degree coefficient is not upper triangular")]
    NotNormalized,
    #[error("leading block is singular at diagonal entry {index}")]
    SingularLeadingBlock { index: usize },
    #[error("Markov sequence has {found} parameters but {needed} are required")]
    SequenceTooShort { needed: usize, found: usize },
    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("Markov sequence is not Hermitian (deviation {deviation:e})")]
    NotHermitianSequence { deviation: f64 },
    #[error("quadruple is not a common multiple (residual {residual:e})")]
    NotACommonMultiple { residual: f64 },
    #[error("companion pencil is singular; the matrix polynomial is not regular")]
    NotRegular,
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    #[error("numerical solver failed: {0}")]
    SolverFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(err: ndarray_linalg::error::LinalgError) -> Self {
        Error::SolverFailure(err.to_string())
    }
}
