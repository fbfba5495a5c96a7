use thiserror::Error;

/// Errors raised by constructions and searches in this crate.
///
/// Axiom violations are not errors: validators return a [`crate::LawReport`]
/// with witnesses. These variants cover malformed input and computations that
/// cannot be carried out at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input tables or matrices have the wrong shape or out-of-range entries.
    #[error("structural error: {0}")]
    Structural(String),

    /// An operation needs to enumerate a carrier that is infinite.
    #[error("capability error: {0}")]
    Capability(String),

    /// An enumeration would exceed its configured cap.
    #[error("capacity exceeded while enumerating {what}: limit {cap}, estimated {estimate}")]
    Capacity {
        what: String,
        cap: usize,
        estimate: String,
    },

    /// A supremum (or infimum) required by the operation does not exist.
    #[error("category is not complete: {0}")]
    NotComplete(String),

    /// A tensor or cotensor required by the operation does not exist.
    #[error("category is not tensored: {0}")]
    NotTensored(String),

    /// Invalid parameters for a builtin or construction.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two objects that must live over the same structure do not.
    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    /// A precondition expressed as a law (closure operator, Q-Set morphism, ...)
    /// does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}
