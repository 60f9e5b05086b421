use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("incompatible scalar modes: {left} and {right}")]
    IncompatibleScalars { left: String, right: String },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("structure constants are not antisymmetric at ({i}, {j})")]
    NotAntisymmetricStructure { i: usize, j: usize },

    #[error("tensor is not antisymmetric")]
    NotAntisymmetric,

    #[error("basis change is singular")]
    SingularBasisChange,

    #[error("basis change determinant {0} is not a nonzero constant; inverse is not polynomial")]
    NonPolynomialInverse(String),

    #[error("cocommutator fails the bialgebra conditions: {0}")]
    CocycleFailure(String),

    #[error("unknown catalog id `{id}`; known ids: {known}")]
    UnknownCatalogId { id: String, known: String },

    #[error("catalog entry `{id}` is a {found}, expected {expected}")]
    WrongEntryKind {
        id: String,
        expected: String,
        found: String,
    },

    #[error("catalog parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("coordinate chart is degenerate here (condition number {condition:.3e}): {detail}")]
    ChartDegenerate { condition: f64, detail: String },

    #[error("point is outside the domain: {0}")]
    Domain(String),

    #[error("requested series order {requested} exceeds the truncation order {limit}")]
    OrderTooHigh { requested: usize, limit: usize },

    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
}
