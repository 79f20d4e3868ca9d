use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("division by zero in GF({0})")]
    DivisionByZero(u16),

    #[error("index {index} out of range for length {len}")]
    IndexError { index: usize, len: usize },

    #[error("operands live in different fields: GF({0}) vs GF({1})")]
    ModulusMismatch(u16, u16),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown solid `{0}`")]
    UnknownSolid(String),

    #[error("face {0} has no unique opposite face")]
    NoOppositeFace(usize),

    #[error("Reed-Solomon construction needs an odd prime, got {0}")]
    UnsupportedPrime(u32),

    #[error("{what}: {size} exceeds the budget of {budget}")]
    TooLarge {
        what: &'static str,
        size: u128,
        budget: u128,
    },

    #[error("contraction produced the zero vector")]
    ZeroState,

    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed state file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
