//! Finite, exact models of simplicial and invertible-simplicial diagrams:
//! the index categories Δ, IΔ and Γ, truncated presheaves on them, nerves of
//! monoids, groups and groupoids, Segal-type conditions, Γ-diagrams from
//! abelian monoids, and word-length filtrations of free-group nerves.

pub mod algebra;
pub mod error;
pub mod filtration;
pub mod gamma;
pub mod index;
pub mod nerve;
pub mod presheaf;
pub mod segal;

pub use algebra::{FinGroup, FinGroupoid, FinMonoid, FreeWord};
pub use error::{Error, Result};
pub use gamma::GammaDiagram;
pub use index::{Category, GammaMorphism, InvMonotoneMap, MonotoneMap, Morphism, PointedMap};
pub use presheaf::{Shape, SubDiagram, TruncatedDiagram};
pub use segal::{ConditionKind, ConditionReport, Witness};
