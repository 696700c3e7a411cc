use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// An inverse Tits map was applied outside its domain.
    #[error("{value} is not in {field}")]
    NotInSubfield { field: &'static str, value: String },
    /// A computed coordinate landed outside the group it must belong to.
    #[error("slot membership violated in {slot}: {value}")]
    SlotMembership { slot: String, value: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid instance: {0}")]
    Instance(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
