use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("group of order {order} exceeds the element-enumeration threshold {limit}")]
    ElementThreshold { order: u64, limit: u64 },

    #[error("group of order {order} exceeds the lattice threshold {limit}")]
    LatticeThreshold { order: u64, limit: u64 },

    #[error("{0} is not a subgroup of the ambient group")]
    NotSubgroup(&'static str),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("operation requires a nontrivial group")]
    TrivialGroup,

    #[error("chief factor does not belong to this group")]
    NotChiefFactor,

    #[error("invalid sigma partition: {0}")]
    InvalidPartition(String),

    #[error("prime {0} lies in no class of the partition")]
    PartitionIncomplete(u64),

    #[error("unknown partition class {0}")]
    UnknownClass(usize),

    #[error("corpus: {0}")]
    Corpus(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
