use thiserror::Error;

/// Errors raised by the library. Every variant corresponds to a violated
/// precondition; none of them are recoverable by retrying.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("pfaffian of an odd-sized matrix")]
    OddSize,
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("shapes are of different kinds (ordinary vs strict)")]
    KindMismatch,
    #[error("shape {0} does not fit the context")]
    ShapeTooLarge(String),
    #[error("type D element with an odd number of barred entries")]
    ParityViolation,
    #[error("shape {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("element {0} is not a minimal coset representative")]
    NotMinimal(String),
    #[error("simple reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },
    #[error("word is not a reduced expression")]
    NotReduced,
    #[error("word does not evaluate to the given element")]
    WordMismatch,
    #[error("cell ({0}, {1}) lies outside the shape")]
    CellOutsideShape(u32, u32),
    #[error("element does not belong to this context")]
    ContextMismatch,

    #[error("cells lie outside the ambient diagram")]
    CellsOutsideAmbient,
    #[error("subset is not contained in the diagram of v")]
    ShapeMismatch,

    #[error("partition has more parts than variables")]
    TooManyParts,
    #[error("not enough parameters supplied (need index {0})")]
    NotEnoughParameters(usize),
    #[error("x entries are not pairwise distinct")]
    DegenerateX,
    #[error("operation is not defined for type A")]
    TypeAUnsupported,
    #[error("operation is not defined for type B")]
    TypeBUnsupported,
    #[error("w is not below v")]
    NotComparable,
}

pub type Result<T> = std::result::Result<T, Error>;
