use thiserror::Error;

/// Errors reported by the braidcount kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input could not be parsed. `column` is 1-based, counted in characters.
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A bound or formula does not apply to the requested parameters.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A numeric comparison could not be certified at the maximal working precision.
    #[error("could not certify {0} within the precision limit")]
    Undecidable(String),

    /// A parameter exceeds a documented computational limit.
    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
