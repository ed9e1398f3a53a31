//! Index categories: the simplicial category, its invertible extension,
//! Segal's category of finite sets (in both descriptions) and the
//! object-decorated variants.
//!
//! Every category here is skeletal, with one object per natural number, so a
//! morphism is identified by its source rank, its target rank and a finite
//! table of values.

mod decorated;
mod delta;
mod gamma;
mod generator;
mod inv_delta;
mod laws;
mod text;

pub use decorated::DecoratedMap;
pub use delta::MonotoneMap;
pub use gamma::{delta_to_gamma, GammaMorphism, PointedMap};
pub use generator::Generator;
pub use inv_delta::{betweenness_check, Direction, InvMonotoneMap};
pub use laws::{
    category_laws, enumerate_hom, projection_family, verify_generated_closure, ClosureReport,
    FamilyKind, LawReport, DEFAULT_CLOSURE_BOUND,
};
pub use text::AnyMorphism;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("cannot compose: inner morphism lands in rank {inner_target}, outer starts at rank {outer_source}")]
    CompositionDomain {
        inner_target: usize,
        outer_source: usize,
    },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("projection family `{0}` needs n >= 1")]
    EmptyFamily(&'static str),
    #[error("cannot compose morphisms of different categories ({0} and {1})")]
    CategoryMismatch(Category, Category),
    #[error("malformed morphism text `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

/// The four enumerable index categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    /// Finite ordinals and order-preserving maps.
    Delta,
    /// Finite ordinals with weakly monotone maps of either direction.
    InvDelta,
    /// Finite sets with disjoint-subset-valued maps.
    Gamma,
    /// Pointed finite sets with basepoint-preserving maps.
    GammaOp,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Delta => "Delta",
            Category::InvDelta => "IDelta",
            Category::Gamma => "Gamma",
            Category::GammaOp => "GammaOp",
        })
    }
}

impl std::str::FromStr for Category {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "delta" | "d" => Ok(Category::Delta),
            "idelta" | "invdelta" | "id" => Ok(Category::InvDelta),
            "gamma" | "g" => Ok(Category::Gamma),
            "gammaop" | "gamma_op" | "pointed" | "p" => Ok(Category::GammaOp),
            _ => Err(IndexError::Parse {
                text: s.to_string(),
                reason: "unknown category (expected delta, idelta, gamma or gammaop)".into(),
            }),
        }
    }
}

/// A morphism of a skeletal index category.
pub trait Morphism: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    const CATEGORY: Category;

    fn source(&self) -> usize;
    fn target(&self) -> usize;
    fn identity(rank: usize) -> Self;

    /// `self ∘ inner`: apply `inner` first.
    fn compose(&self, inner: &Self) -> Result<Self, IndexError>;

    /// The complete hom-set, in a fixed order without duplicates.
    fn hom(source: usize, target: usize) -> Vec<Self>;
}

pub(crate) fn check_composable(inner_target: usize, outer_source: usize) -> Result<(), IndexError> {
    if inner_target != outer_source {
        return Err(IndexError::CompositionDomain {
            inner_target,
            outer_source,
        });
    }
    Ok(())
}

/// All weakly increasing sequences of length `len` with values in `0..=max`,
/// in lexicographic order.
pub(crate) fn increasing_sequences(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, lo: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(len, v, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 0, max, &mut Vec::with_capacity(len), &mut out);
    out
}
