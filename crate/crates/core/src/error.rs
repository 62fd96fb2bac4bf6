use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("{what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("bad parameter: {0}")]
    Param(String),

    #[error("cycle enumeration saturated at {0} cycles")]
    Saturated(usize),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
