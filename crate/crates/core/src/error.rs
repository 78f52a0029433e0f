use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed caller input: bad permutations, mismatched degrees, unknown names.
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{what} bound {bound} exceeded (needed {needed})")]
    BoundExceeded {
        what: &'static str,
        bound: u64,
        needed: u64,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
            Error::BoundExceeded { .. } => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
