use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not allowed for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("node cap of {cap} exceeded")]
    NodeCap { cap: usize },

    #[error("graph has {0} highest-weight nodes, expected exactly 1")]
    NotHighestWeight(usize),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no box rule for column top {0}")]
    UnmatchedTop(String),

    #[error("wall decomposition failed: {0}")]
    Decomposition(String),

    #[error("operator string left the target crystal at step {0}")]
    StringBroken(usize),

    #[error("{0} is not an element of the model")]
    NotInModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
