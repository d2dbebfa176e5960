//! Error types shared across the library.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by frontends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: parse errors, arity mismatches, unknown identifiers.
    Input,
    /// Mathematically well-formed input rejected by a computation
    /// (invalid cross-section, excluded locus, non-invariant target, ...).
    Rejected,
    /// An internal consistency check failed; indicates a bug.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("{0}")]
    Input(String),

    #[error("variable context mismatch: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("point lies on the excluded locus: denominator {denominator} vanishes")]
    ExcludedLocus { denominator: String },

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("target is not an invariant of the action: {0}")]
    NotInvariant(String),

    #[error("polynomial is not defined along the cross-section: {0}")]
    NotDefinedOnSection(String),

    #[error("cross-section rejected: {reason}")]
    SectionRejected {
        reason: String,
        /// Rendered diagnostic report of the failed candidate.
        report: String,
    },

    #[error("retry budget exhausted after {tried} candidate sections")]
    RetriesExhausted {
        tried: usize,
        /// One line per rejected candidate: generators and rejection reason.
        rejections: Vec<String>,
    },

    #[error("action validation failed: {0}")]
    InvalidAction(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::Input(_) | Error::InvalidAction(_) => ErrorKind::Input,
            Error::ContextMismatch { .. } | Error::Internal(_) => ErrorKind::Internal,
            Error::DivisionByZero
            | Error::ExcludedLocus { .. }
            | Error::NotZeroDimensional
            | Error::NotInvariant(_)
            | Error::NotDefinedOnSection(_)
            | Error::SectionRejected { .. }
            | Error::RetriesExhausted { .. } => ErrorKind::Rejected,
        }
    }
}
