use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed operation tables, out-of-range entries, or bad JSON shape.
    #[error("format error: {0}")]
    Format(String),

    /// Unknown catalog name or identity key.
    #[error("lookup error: {0}")]
    Lookup(String),

    /// A configured cap was exceeded; the computation was not attempted.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Term or identity syntax error, with a byte position into the input.
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// An operation's precondition does not hold.
    #[error("precondition error: {0}")]
    Precondition(String),

    /// A variable required for evaluation has no assigned value.
    #[error("assignment error: variable '{0}' is not assigned")]
    UnassignedVariable(String),

    /// A rewrite step's trigger is not contained in the current term.
    #[error("step mismatch: word '{0}' is not present in the current term")]
    StepMismatch(String),

    /// A derivation replay reached a term different from the expected end.
    #[error("replay mismatch: final term '{got}' differs from expected '{expected}'")]
    ReplayMismatch { got: String, expected: String },

    /// The labeling reconstruction found no (or more than one) consistent assignment.
    #[error("reconstruction error: {0}")]
    Reconstruction(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
