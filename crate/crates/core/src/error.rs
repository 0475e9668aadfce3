use std::path::PathBuf;

/// Errors surfaced by the solvers, generators, and harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its documented range.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    /// Two arguments disagree on a dimension.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A weighted row with zero norm defines no hyperplane to project onto.
    #[error("degenerate row: weighted row has zero norm")]
    DegenerateRow,

    /// Norm-proportional sampling over a matrix whose rows are all zero.
    #[error("degenerate matrix: every row has zero norm")]
    DegenerateMatrix,

    /// File I/O failure, with the offending path.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParam {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
