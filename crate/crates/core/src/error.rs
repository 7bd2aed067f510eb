use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field size q = {0}: need a prime q < 65536 with q = 1 mod 4")]
    InvalidField(u64),
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
