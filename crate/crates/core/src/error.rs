use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Structurally invalid input (bad vertex ids, colors out of range, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed input that violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An outcome that contradicts a proven guarantee of a construction.
    #[error("falsification: {0}")]
    Falsification(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn falsification(msg: impl Into<String>) -> Self {
        Error::Falsification(msg.into())
    }
}
