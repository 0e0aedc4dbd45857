use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interpolation node {0} appears more than once")]
    DuplicateNode(String),
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("polynomial is not a square in Q[x]")]
    NotASquare,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("value {value} at {at} is not an integer")]
    NonIntegerValue { at: String, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
