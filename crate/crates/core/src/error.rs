use thiserror::Error;

/// Errors raised by the closed-form builders, the numeric evaluators and the
/// verification suites.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum MellinError {
    /// A parameter falls outside the region where the integral or series
    /// converges.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested precision cannot be met within the configured term or
    /// level budget.
    #[error("precision of {digits} digits unreachable: {reason}")]
    PrecisionUnreachable { digits: u32, reason: String },

    /// An internal identity that must hold exactly did not.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown identity family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, MellinError>;

pub(crate) fn domain(msg: impl Into<String>) -> MellinError {
    MellinError::Domain(msg.into())
}
