use std::io;

use thiserror::Error;

/// Problems with one line of an input file.
#[derive(Debug, Error)]
pub enum LineError {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error(transparent)]
    Core(#[from] sentiscore_core::Error),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}:{line}: {source}")]
    Line {
        path: String,
        line: usize,
        #[source]
        source: LineError,
    },
    #[error(transparent)]
    Core(#[from] sentiscore_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn line(path: &str, line: usize, source: impl Into<LineError>) -> Self {
        Error::Line {
            path: path.to_string(),
            line,
            source: source.into(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            Error::Line {
                source: LineError::Malformed(_),
                ..
            } => "MALFORMED_LINE",
            Error::Line {
                source: LineError::Core(e),
                ..
            } => e.code(),
            Error::Core(e) => e.code(),
            Error::Io { .. } => "IO_ERROR",
            Error::Usage(_) => "USAGE",
            Error::Internal(_) => "INTERNAL",
        }
    }

    pub fn line_number(&self) -> Option<usize> {
        match self {
            Error::Line { line, .. } => Some(*line),
            _ => None,
        }
    }

    /// 1 for bad input, 2 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 2,
            _ => 1,
        }
    }
}
