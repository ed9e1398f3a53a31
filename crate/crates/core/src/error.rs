use thiserror::Error;

use crate::index::IndexError;
use crate::segal::ConditionReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Index(#[from] IndexError),

    #[error("rank {needed} is beyond the truncation {truncation}")]
    RankExceeded { needed: usize, truncation: usize },

    #[error("diagrams are truncated at different ranks ({0} and {1})")]
    TruncationMismatch(usize, usize),

    #[error("diagram shapes differ: {0}")]
    ShapeMismatch(String),

    #[error("reduction is undefined: level 0 is empty")]
    ReductionUndefined,

    #[error("invalid spine: {0}")]
    InvalidSpine(String),

    #[error("selection is not a subobject: {0}")]
    NotClosed(String),

    #[error("components are not natural: {0}")]
    NotNatural(String),

    #[error("word bound {bound} exceeded by {morphism} acting on {element}")]
    BoundExceeded {
        bound: usize,
        morphism: String,
        element: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("refused: {reason}")]
    Refused {
        reason: String,
        report: Box<ConditionReport>,
    },

    #[error("unsupported: {0}")]
    Capability(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
