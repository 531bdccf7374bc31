use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation is not parallel: {0}")]
    NonParallelRelation(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("morphisms are not parallel: {0}")]
    NotParallel(String),
    #[error("category is not saturated: {0}")]
    NotSaturated(String),
    #[error("equality undecided within bounds: {0}")]
    UnknownEquality(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("object table is not commutative: {0}")]
    NoncommutativeObjectTable(String),
    #[error("incoherent symmetry data: {0}")]
    IncoherentSymmetry(String),
    #[error("incoherent diagram data: {0}")]
    IncoherentDiagram(String),
    #[error("factorization conditions not satisfied: {0}")]
    ConditionsNotSatisfied(String),
    #[error("induced product on components is ill-defined: {0}")]
    IllDefinedProduct(String),
    #[error("undefined product in object monoid: {0}")]
    UndefinedProduct(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
