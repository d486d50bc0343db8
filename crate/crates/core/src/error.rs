use std::fmt;

use thiserror::Error;

/// Errors raised by the algebraic and combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("operation requires at least one variable")]
    ZeroArity,

    #[error("{0} undefined for the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("the void complex has no partition")]
    VoidComplex,

    #[error("lower endpoint {lower} is not contained in upper endpoint {upper}")]
    NotAnInterval { lower: String, upper: String },

    #[error("stanley depth undefined for an empty decomposition")]
    EmptyDecomposition,

    #[error("decomposition target mismatch: expected {expected}")]
    TargetMismatch { expected: &'static str },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A text-format error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}
