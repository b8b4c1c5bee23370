use thiserror::Error;

/// Failures raised by the library.
///
/// Guard and precondition errors are caller mistakes. `Inconsistency` means a
/// formula that should produce an integer did not, or two methods disagree,
/// which points at a bug or a mistyped coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource guard `{guard}` exceeded: requested {requested}, limit {limit}")]
    Guard {
        guard: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("recurrence `{spec}` is singular at n = {n}: leading coefficient vanishes")]
    Singularity { spec: String, n: i64 },

    #[error("insufficient terms: need at least {need}, got {have}")]
    InsufficientTerms { need: usize, have: usize },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    /// Process exit status for this error under the CLI contract:
    /// 1 for verification failures, 2 for usage and guard errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistency(_) | Error::Singularity { .. } => 1,
            Error::Precondition(_) | Error::Guard { .. } | Error::InsufficientTerms { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
