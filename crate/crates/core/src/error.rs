use thiserror::Error;

/// Errors produced by the monomial-ideal routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("ideals live in different rings ({left} vs {right})")]
    AmbientMismatch { left: String, right: String },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("cannot take a colon by the zero ideal")]
    ZeroDivisor,

    #[error("{what} budget exceeded (limit {limit})")]
    Budget { what: &'static str, limit: u64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{0}")]
    Domain(String),

    #[error("{0}")]
    Usage(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
