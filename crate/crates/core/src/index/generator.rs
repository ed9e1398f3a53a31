use std::fmt;

use serde::Serialize;

use super::{InvMonotoneMap, MonotoneMap};

/// A generating morphism of the (invertible) simplicial category.
///
/// `rank` is always the rank the morphism points *into*, which is the level
/// a presheaf action starts from: a face with `rank: k` acts `X_k -> X_{k-1}`,
/// a degeneracy with `rank: k` acts `X_k -> X_{k+1}`, a flip acts on `X_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    /// Coface `[rank-1] -> [rank]` skipping `index`.
    Face { rank: usize, index: usize },
    /// Codegeneracy `[rank+1] -> [rank]` repeating `index`.
    Degeneracy { rank: usize, index: usize },
    /// `i ↦ rank - i` on `I[rank]`.
    Flip { rank: usize },
}

impl Generator {
    pub fn as_map(&self) -> InvMonotoneMap {
        match *self {
            Generator::Face { rank, index } => MonotoneMap::face(rank, index).into(),
            Generator::Degeneracy { rank, index } => MonotoneMap::degeneracy(rank, index).into(),
            Generator::Flip { rank } => InvMonotoneMap::flip(rank),
        }
    }

    /// Level the presheaf action reads from.
    pub fn from_level(&self) -> usize {
        match *self {
            Generator::Face { rank, .. }
            | Generator::Degeneracy { rank, .. }
            | Generator::Flip { rank } => rank,
        }
    }

    /// Level the presheaf action writes to.
    pub fn to_level(&self) -> usize {
        match *self {
            Generator::Face { rank, .. } => rank - 1,
            Generator::Degeneracy { rank, .. } => rank + 1,
            Generator::Flip { rank } => rank,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Face { rank, index } => write!(f, "d{index}@{rank}"),
            Generator::Degeneracy { rank, index } => write!(f, "s{index}@{rank}"),
            Generator::Flip { rank } => write!(f, "flip@{rank}"),
        }
    }
}
