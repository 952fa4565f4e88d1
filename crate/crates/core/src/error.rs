use thiserror::Error;

/// Errors produced by complex construction, code building and the enumeration engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for an ambient set of {ambient} vertices")]
    VertexOutOfRange { vertex: usize, ambient: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("ambient vertex count {0} exceeds the supported maximum of 63")]
    TooManyVertices(usize),

    #[error("degenerate complex: {0}")]
    Degenerate(String),

    #[error("apex {apex} is not fresh: the next free vertex is {expected}")]
    ApexNotFresh { apex: usize, expected: usize },

    #[error("face {0:?} is not a facet of the complex")]
    NotAFacet(Vec<usize>),

    #[error("gluing hypothesis violated: {0}")]
    GlueHypothesis(String),

    #[error("{what} budget exceeded: need {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("{0} is not prime; only prime fields are supported")]
    NotPrime(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("message has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("operation requires the binary field, got p = {0}")]
    NotBinary(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
