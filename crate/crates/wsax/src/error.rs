use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("dataset contains no rows")]
    EmptyDataset,
    #[error("line {line}: expected {expected} values, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: cannot parse {token:?} as {what}")]
    Field {
        line: usize,
        column: usize,
        token: String,
        what: &'static str,
    },
    #[error("weights file: cannot parse token {index} ({token:?}) as a number")]
    WeightToken { index: usize, token: String },
    #[error("weights file contains no values")]
    EmptyWeights,
    #[error("invalid {what} file: {message}")]
    Format { what: &'static str, message: String },
    #[error("cannot serialize {what}: {message}")]
    Serialize { what: &'static str, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] wsax_core::Error),
}

impl Error {
    /// 1 for bad input, 2 for failures inside the pipeline itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Core(wsax_core::Error::OptimizationFailure { .. }) | Error::Serialize { .. } => {
                2
            }
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
