use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    BadShape(String),
    #[error("the weight characters do not generate the character group")]
    NonGenerating,
    #[error("character {0:?} is not an element of the group")]
    BadCharacter(Vec<i64>),
    #[error("type vector {0:?} does not have trivial degree")]
    NotInM(Vec<i64>),
    #[error("invalid GIT parameter: {0}")]
    BadTheta(String),
    #[error("w must be componentwise nonnegative, got {0}")]
    NegativeW(String),
    #[error("inequality and generator descriptions disagree: {0}")]
    MismatchedDescriptions(String),
    #[error("polyhedron is empty")]
    Empty,
    #[error("polyhedron is not full-dimensional")]
    NotFullDimensional,
    #[error("w lies outside the support of the fan")]
    OutsideSupport,
    #[error("linear program has no optimum")]
    NotOptimal,
    #[error("objective is unbounded on the dual slice")]
    UnboundedObjective,
    #[error("representation violates the relation at vertex {rho} for labels {i}, {j}")]
    RelationsViolated { rho: usize, i: usize, j: usize },
    #[error("the trivial group has no G-Hilbert chamber")]
    TrivialGroup,
    #[error("certificate check failed: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
