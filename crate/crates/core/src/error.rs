use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("denominator vanishes at q = 1")]
    PoleAtOne,

    #[error("coefficient of {partition} is not a polynomial in q: {value}")]
    NonPolynomial { partition: String, value: String },

    #[error("{what}: size {got} exceeds the configured limit {limit}")]
    CostGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("graph is not a natural unit interval graph: {0}")]
    NotNuig(String),

    #[error("monomial data is not symmetric: compositions {left:?} and {right:?} disagree")]
    NotSymmetric { left: Vec<usize>, right: Vec<usize> },

    #[error("inconsistent monomial expansion: {0}")]
    Inconsistent(String),

    #[error("matrix window too small: {0}")]
    WindowTooSmall(String),

    #[error("parse error at byte {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },

    #[error("invalid graph expression at byte {offset}: {message}")]
    Semantic { offset: usize, message: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors that signal a broken mathematical invariant rather than
    /// bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::InvariantViolation(_) | Error::NonPolynomial { .. } | Error::NotSymmetric { .. }
        )
    }
}
