use thiserror::Error;

/// Errors raised by matrix algebra, signal expansion, identification and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    Shape {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{what} = {value} is outside [0, 1]")]
    OutOfRange { what: String, value: f64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("index {index} out of range 1..={bound}")]
    Index { index: usize, bound: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("usage: {0}")]
    Usage(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(op: &'static str, left: (usize, usize), right: (usize, usize)) -> Self {
        Error::Shape {
            op,
            left_rows: left.0,
            left_cols: left.1,
            right_rows: right.0,
            right_cols: right.1,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Shape { .. } | Error::NotSquare { .. } => 3,
            Error::Io(_) => 1,
            Error::Usage(_) => 64,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
