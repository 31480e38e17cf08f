use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field of order {p}^{degree} does not fit the element representation")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("modulus is not irreducible over F_{0}")]
    Reducible(u32),
    #[error("field has {size} elements, above the enumeration ceiling of {ceiling}")]
    CeilingExceeded { size: u64, ceiling: u64 },
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("element index {0} is out of range for this field")]
    ElementOutOfRange(u64),
    #[error("no embedding: {0}")]
    NoEmbedding(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("polynomial does not have the required shape: {0}")]
    ShapeMismatch(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
