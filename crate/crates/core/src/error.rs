use crate::scalar::RingId;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingId, right: RingId },
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not hermitian")]
    NotHermitian,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("not a closed monomorphism: s*s is not invertible")]
    NotClosedMono,
    #[error("no solution exists")]
    NoSolution,
    #[error("wide cospan is not split")]
    NotSplit,
    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("morphism is not a monomorphism")]
    NotMono,
    #[error("morphism is not an endomorphism")]
    NotEndo,
    #[error("morphism is singular")]
    Singular,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("morphism is not a contraction")]
    NotContraction,
    #[error("morphism is not a strict contraction")]
    NotStrictContraction,
    #[error("morphism is not a partial isometry")]
    NotPartialIsometry,
    #[error("codilations have different subjects")]
    NotSameSubject,
    #[error("morphism is not an isometry")]
    NotIsometry,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionFailed(msg.into())
    }

    /// Parse errors map to exit code 2 in the CLI; everything else is 1.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
