use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Non-units are not errors: [`crate::RingContext::invert`] returns `None`
/// for them, since zero divisors are routine in quotient rings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring configuration: {0}")]
    InvalidRing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operands belong to different ring contexts")]
    ContextMismatch,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("division unavailable: leading coefficient {0} is not a unit")]
    DivisionUnavailable(String),

    #[error("left division unavailable: sigma is not invertible")]
    LeftDivisionUnavailable,

    #[error("lclm step failed at point {index}: evaluation {value} is a non-unit")]
    LclmStepFailed { index: usize, value: String },

    #[error("{divisor} does not right-divide {dividend} (remainder {remainder})")]
    NotRightFactor {
        dividend: String,
        divisor: String,
        remainder: String,
    },

    #[error("control matrix unavailable: {0}")]
    ControlMatrixUnavailable(String),

    #[error("search space of {size} exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("no nonzero codewords")]
    NoNonzeroCodewords,

    #[error("operation requires {0}")]
    WrongRingKind(&'static str),

    #[error("word operator f^{n}_{i} undefined: i > n")]
    WordIndex { n: usize, i: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
