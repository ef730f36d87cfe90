use thiserror::Error;

/// Domain errors. Every variant names the precondition that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{k} does not fit in 64 bits")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("element or polynomial belongs to a different field")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires odd characteristic")]
    NeedsOddCharacteristic,
    #[error("operation requires characteristic 2")]
    NeedsCharacteristicTwo,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("polynomial is not separable")]
    Inseparable,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible: {0}")]
    Reducible(String),
    #[error("{subject} must not exceed {limit}, got {got}")]
    GuardExceeded {
        subject: &'static str,
        limit: u128,
        got: u128,
    },
    #[error("subfield embedding needs degree {small} to divide {big} over the same prime")]
    NoEmbedding { small: u32, big: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag, used in structured CLI errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::ZeroDegree => "zero_degree",
            Error::FieldTooLarge { .. } => "field_too_large",
            Error::FieldMismatch => "field_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::NeedsOddCharacteristic => "needs_odd_characteristic",
            Error::NeedsCharacteristicTwo => "needs_characteristic_two",
            Error::ConstantPolynomial => "constant_polynomial",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::DegreeTooSmall { .. } => "degree_too_small",
            Error::Inseparable => "inseparable",
            Error::NotMonic => "not_monic",
            Error::Reducible(_) => "reducible",
            Error::GuardExceeded { .. } => "guard_exceeded",
            Error::NoEmbedding { .. } => "no_embedding",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Parse { .. } => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
