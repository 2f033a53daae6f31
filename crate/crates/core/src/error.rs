use thiserror::Error;

/// Failures of exact scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter value {0} is a pole of a coefficient")]
    Pole(String),
    #[error("cannot parse scalar {input:?}: {message}")]
    Parse { input: String, message: String },
    #[error("unknown symbol {0:?}: only the single parameter `t` is supported")]
    UnknownSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("matrix entry ({row},{col}) is a rational function in a rational matrix")]
    MixedScalarKinds { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("sign entry ({row},{col}) is {value}, expected 1 or -1")]
    InvalidSign { row: usize, col: usize, value: i64 },
    #[error("sign matrix is not symmetric at {0:?}")]
    AsymmetricSigns(Vec<(usize, usize)>),
    #[error("bracket <e{0},e{0}> requires s[{0}][{0}] = -1")]
    DiagonalBracket(usize),
    #[error("bracket <e{i},e{j}> has an e{k} component that violates the grading")]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("grading assignment: {0}")]
    Grading(String),
    #[error("operation needs a grading assignment")]
    MissingGrading,
    #[error("relation is not quadratic-linear: {0}")]
    NotQuadraticLinear(String),
    #[error("duplicate leading monomial {0}")]
    DuplicateLeading(String),
    #[error("d^2 != 0 around degree {0}: the ranks exceed the dimension")]
    NotADifferential(u32),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("algebra file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
