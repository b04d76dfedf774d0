use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("subfield degree m={m} is outside the supported range 4..=16")]
    UnsupportedDegree { m: u32 },

    #[error("reduction polynomial {poly:#x} is not primitive of degree {degree}")]
    NotPrimitive { poly: u64, degree: u32 },

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("element {0:#x} does not lie in GF(q)")]
    NotInSubfield(u32),

    #[error("element {0:#x} does not lie on the unit circle")]
    NotOnUnitCircle(u32),

    #[error("ESP degree {ell} out of range for {k} variables")]
    EspDegree { ell: usize, k: usize },

    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
