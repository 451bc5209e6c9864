use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("algebra signatures differ: {0}")]
    SignatureMismatch(String),
    #[error("permutation degree {got} does not match {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{what} would exceed the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("group element is not a permutation matrix")]
    NotAPermutationGroup,
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("basis of size {size} exceeds the limit {limit}")]
    BasisTooLarge { size: usize, limit: usize },
    #[error("element is not homogeneous in theta-degree parity")]
    NotHomogeneous,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
