use thiserror::Error;

/// Domain errors. Every variant carries a stable string code (see [`Error::code`])
/// so scripts driving the CLI can match on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial has {got} exponents but the ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("exponent overflow (limit {limit})")]
    ExponentOverflow { limit: u32 },
    #[error("denominator is not contained in the numerator")]
    DenominatorNotContained,
    #[error("module is not artinian")]
    NotArtinian,
    #[error("prime {0} is not associated to the module")]
    PrimeNotAssociated(String),
    #[error("check is inapplicable: {0}")]
    Inapplicable(String),
    #[error("the zero ideal has no generator degrees")]
    ZeroIdeal,
    #[error("J is not contained in I")]
    NotContained,
    #[error("empty list of linear laws")]
    EmptyLawSet,
    #[error("unsupported family kind for this operation: {0}")]
    UnsupportedKind(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("series did not stabilize: {0}; increase n_max")]
    NotStabilized(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::RingMismatch => "ring-mismatch",
            Error::InvalidRing(_) => "invalid-ring",
            Error::ColonByZero => "colon-by-zero",
            Error::ExponentOverflow { .. } => "exponent-overflow",
            Error::DenominatorNotContained => "denominator-not-contained",
            Error::NotArtinian => "not-artinian",
            Error::PrimeNotAssociated(_) => "prime-not-associated",
            Error::Inapplicable(_) => "inapplicable",
            Error::ZeroIdeal => "zero-ideal",
            Error::NotContained => "not-contained",
            Error::EmptyLawSet => "empty-law-set",
            Error::UnsupportedKind(_) => "unsupported-kind",
            Error::Unsupported(_) => "unsupported",
            Error::InvalidFamily(_) => "invalid-family",
            Error::NotStabilized(_) => "not-stabilized",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
