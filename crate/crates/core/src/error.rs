use thiserror::Error;

/// Errors raised by combinatorial and cohomological operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("simplex {0} is not a face of the complex")]
    NotAFace(String),

    #[error("vertex label `{0}` does not occur in the complex")]
    UnknownLabel(String),

    #[error("simplex has a repeated vertex: {0}")]
    RepeatedVertex(String),

    #[error("simplex must have at least one vertex")]
    EmptySimplex,

    #[error("operation requires a nonempty complex")]
    EmptyComplex,

    #[error("not a subcomplex: face {0} is missing from the ambient complex")]
    NotSubcomplex(String),

    #[error("expected a complex of dimension at most {max}, found dimension {found}")]
    DimensionTooLarge { max: isize, found: isize },

    #[error("link of {0} is empty because the face has top dimension")]
    TopDimensionalFace(String),

    #[error("complex is disconnected ({0} components)")]
    Disconnected(usize),

    #[error("invalid vertex label `{0}`: labels must be nonempty, contain no whitespace and not start with `#`")]
    InvalidLabel(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

pub type Result<T, E = TopologyError> = std::result::Result<T, E>;
