use thiserror::Error;

/// Errors raised by the library.
///
/// Variants marked *internal* indicate a broken invariant in this crate
/// rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("evaluation at q = {0} hits a pole")]
    Pole(String),

    #[error("n = {n} exceeds the configured maximum {max}")]
    BoundExceeded { n: usize, max: usize },

    #[error("n must be at least 1")]
    EmptyRank,

    #[error("composition table does not define a group: {0}")]
    NotAGroup(String),

    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("element {element} is not in a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("fixed set of stratum {representative} is not stable under its twisted centralizer")]
    UnstableStratum { representative: usize },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
