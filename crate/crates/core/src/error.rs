use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("modulus {n} exceeds the enumeration budget {budget}")]
    BudgetExceeded { n: u64, budget: u64 },

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(i64),

    #[error("negative index {0} requested for a singular p-sequence")]
    NegativeIndexSingular(i64),

    #[error("matrix is not invertible over the integers (det = {0})")]
    NotUnimodular(String),

    #[error("matrix is not invertible modulo {0}")]
    NotInvertibleMod(u64),

    #[error("matrix is not hyperbolic")]
    NotHyperbolic,

    #[error("quadratic form is not primitive (content {0})")]
    NotPrimitive(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True when the error stems from a size limit rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
