use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid edge locus: {0}")]
    InvalidLocus(String),

    #[error("invalid vertex pair ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, String),

    #[error("cells do not form a partition of the vertex set: {0}")]
    InvalidCells(String),

    #[error("partition is not equitable")]
    NotEquitable,

    #[error("matrix is not symmetric (max deviation {0:e})")]
    Asymmetric(f64),

    #[error("matrix dimension {0} exceeds the supported maximum {1}")]
    TooLarge(usize, usize),

    #[error("eigen-solve did not meet tolerance: residual {residual:e} > {bound:e}")]
    EigenResidual { residual: f64, bound: f64 },

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("expected {expected} real roots, certified {found}")]
    MissingRealRoots { expected: usize, found: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}
