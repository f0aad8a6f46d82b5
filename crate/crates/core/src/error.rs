use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring has {0} variables; at most {max} are supported", max = crate::MAX_VARS)]
    TooManyVariables(usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ideal has no nonzero generators")]
    EmptyIdeal,
    #[error("colon by the zero polynomial")]
    ColonByZero,
    #[error("quadrics are linearly dependent")]
    DependentQuadrics,
    #[error("not a quadratic almost complete intersection: {0}")]
    NotAci(String),
    #[error("retry budget exhausted: {0}")]
    RetryBudgetExhausted(String),
    #[error("complex is not minimal")]
    NotMinimal,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
