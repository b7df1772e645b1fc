use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} must be positive, got 0")]
    Zero { what: &'static str },

    #[error("evaluation point must satisfy q >= 2, got {0}")]
    QTooSmall(String),

    #[error("{0} is even; an odd index is required")]
    EvenIndex(u64),

    #[error("the bound check is not defined for n = 1")]
    IndexOne,

    #[error("polynomial division is not exact")]
    NonExactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("index arithmetic overflowed u64")]
    Overflow,

    #[error("coefficient threshold {0} exceeds the range of exhaustive evaluation")]
    ThresholdTooLarge(String),

    #[error("{m} and {n} are not related by ≺ in that order")]
    NotRelated { m: u64, n: u64 },

    #[error("{m} and {n} are incomparable")]
    Incomparable {
        m: u64,
        n: u64,
        certificate: Box<crate::comparator::Certificate>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("checkpoint hash mismatch: expected {expected}, computed {computed}")]
    CheckpointHash { expected: String, computed: String },

    #[error("checkpoint does not match this run: {0}")]
    CheckpointMismatch(String),

    #[error("run interrupted")]
    Interrupted,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
