use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node index {index} out of range for {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid tour: {0}")]
    NotPermutation(String),

    #[error("{algorithm} supports at most {limit} nodes, instance has {n}")]
    TooLarge {
        algorithm: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("tour dimension {found} does not match pheromone matrix dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("probability vector has no positive entry")]
    EmptyDistribution,

    #[error("found length {found} is below the recorded optimum {optimum}; optima table or oracle is corrupt")]
    BeatOptimum { found: f64, optimum: f64 },

    #[error("cannot access {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
