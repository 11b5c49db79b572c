use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scalars or matrices from different fields were combined")]
    MixedField,
    #[error("composite of differentials is nonzero")]
    NotAComplex,
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at position {position}: expected {}", expected.join(" or "))]
    Syntax { position: usize, expected: Vec<String> },
    #[error("relation {0} is not a monomial")]
    NonMonomialRelation(String),
    #[error("relations force the unit to vanish")]
    RelationInconsistency,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("algebra is not connected: {0}")]
    NotConnected(String),
    #[error("algebra is not augmented")]
    NotAugmented,
    #[error("object is not finite dimensional within its truncation")]
    InfiniteDimensional,
    #[error("objects live over different bases")]
    BaseMismatch,
    #[error("comodule does not descend: {0}")]
    NotDescendable(String),
    #[error("operator is not nilpotent of the required order")]
    NotNilpotent,
    #[error("the point must be nonzero")]
    ZeroPoint,
    #[error("not a comonad: {0}")]
    NotAComonad(String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("not a Galois extension: {0}")]
    NotGalois(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution: {0}")]
    Inconsistent(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
