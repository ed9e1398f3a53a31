use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{DiagramMorphism, Shape, SimplicialModel, SubDiagram, TruncatedDiagram};
use crate::error::{Error, Result};
use crate::index::{InvMonotoneMap, MonotoneMap, Morphism};

/// `Δ[n]` or `IΔ[n]` as a model: level `k` is the hom-set into `[n]`, acting
/// by precomposition.
struct Representable {
    shape: Shape,
    levels: Vec<Vec<InvMonotoneMap>>,
    index: Vec<HashMap<InvMonotoneMap, usize>>,
}

impl Representable {
    fn new(shape: Shape, n: usize, truncation: usize) -> Self {
        let levels: Vec<Vec<InvMonotoneMap>> = (0..=truncation)
            .map(|k| match shape {
                Shape::Simplicial => MonotoneMap::hom(k, n)
                    .into_iter()
                    .map(InvMonotoneMap::from)
                    .collect(),
                Shape::Invertible => InvMonotoneMap::hom(k, n),
            })
            .collect();
        let index = levels
            .iter()
            .map(|l| l.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        Self {
            shape,
            levels,
            index,
        }
    }
}

impl SimplicialModel for Representable {
    fn shape(&self) -> Shape {
        self.shape
    }

    fn level_size(&self, level: usize) -> usize {
        self.levels[level].len()
    }

    fn label(&self, level: usize, element: usize) -> String {
        let values: Vec<String> = self.levels[level][element]
            .values()
            .iter()
            .map(usize::to_string)
            .collect();
        values.join(",")
    }

    fn act(&self, theta: &InvMonotoneMap, element: usize) -> Result<usize> {
        let f = &self.levels[theta.target()][element];
        let composite = f.compose(theta)?;
        Ok(self.index[theta.source()][&composite])
    }
}

/// The representable `Δ[n]` (simplicial) or `IΔ[n]` (invertible), truncated.
/// Elements are labelled by their value lists, e.g. `0,2`.
pub fn representable(shape: Shape, n: usize, truncation: usize) -> TruncatedDiagram {
    let model = Representable::new(shape, n, truncation);
    TruncatedDiagram::materialize(&model, truncation).expect("representables are total")
}

/// One element per level.
pub fn terminal(shape: Shape, truncation: usize) -> TruncatedDiagram {
    let labels = vec![vec!["*".to_string()]; truncation + 1];
    let faces = (0..=truncation)
        .map(|k| if k == 0 { Vec::new() } else { vec![vec![0]; k + 1] })
        .collect();
    let degeneracies = (0..=truncation)
        .map(|k| if k == truncation { Vec::new() } else { vec![vec![0]; k + 1] })
        .collect();
    let flips = match shape {
        Shape::Simplicial => Vec::new(),
        Shape::Invertible => vec![vec![0]; truncation + 1],
    };
    TruncatedDiagram::from_tables(shape, labels, faces, degeneracies, flips)
        .expect("terminal tables are well formed")
}

/// Collapse the subobject generated by level 0 to a single basepoint.
pub fn reduce(d: &TruncatedDiagram) -> Result<TruncatedDiagram> {
    reduce_with_map(d).map(|(r, _)| r)
}

/// [`reduce`] together with the quotient map `d -> reduce(d)`.
///
/// The basepoint is element `0` of every level and is labelled `*`; the
/// other elements keep their relative order and labels.
pub fn reduce_with_map(d: &TruncatedDiagram) -> Result<(TruncatedDiagram, DiagramMorphism)> {
    if d.level_size(0) == 0 {
        return Err(Error::ReductionUndefined);
    }
    let parent = Arc::new(d.clone());
    let collapsed = SubDiagram::generated(parent, (0..d.level_size(0)).map(|v| (0, v)))?;
    let rank = d.rank();
    let mut quotient = Vec::with_capacity(rank + 1);
    let mut labels = Vec::with_capacity(rank + 1);
    let mut survivors = Vec::with_capacity(rank + 1);
    for k in 0..=rank {
        let mut q = vec![0; d.level_size(k)];
        let mut l = vec!["*".to_string()];
        let mut s = vec![None];
        for x in 0..d.level_size(k) {
            if !collapsed.contains(k, x) {
                q[x] = l.len();
                l.push(d.label(k, x).to_string());
                s.push(Some(x));
            }
        }
        quotient.push(q);
        labels.push(l);
        survivors.push(s);
    }
    let induced = |k: usize, table: &[usize], to: usize| -> Vec<usize> {
        survivors[k]
            .iter()
            .map(|x| x.map_or(0, |x| quotient[to][table[x]]))
            .collect()
    };
    let faces = (0..=rank)
        .map(|k| {
            (0..if k == 0 { 0 } else { k + 1 })
                .map(|i| induced(k, d.face(k, i), k - 1))
                .collect()
        })
        .collect();
    let degeneracies = (0..=rank)
        .map(|k| {
            (0..if k == rank { 0 } else { k + 1 })
                .map(|i| induced(k, d.degeneracy(k, i), k + 1))
                .collect()
        })
        .collect();
    let flips = match d.shape() {
        Shape::Simplicial => Vec::new(),
        Shape::Invertible => (0..=rank)
            .map(|k| induced(k, d.flip(k).expect("invertible"), k))
            .collect(),
    };
    let reduced = TruncatedDiagram::from_tables(d.shape(), labels, faces, degeneracies, flips)?;
    Ok((reduced, DiagramMorphism::new(quotient)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpineKind {
    /// Edges `k -> k+1` inside `Δ[n]`.
    G,
    /// Edges `k -> k+1` inside `IΔ[n]`.
    IG,
    /// Edges `0 -> k+1` inside `Δ[n]`.
    H,
}

/// The subobject of the (reduced) representable generated by the spine's
/// edges at level 1.
pub fn spine(kind: SpineKind, n: usize, truncation: usize, reduced: bool) -> Result<SubDiagram> {
    if n < 2 {
        return Err(Error::InvalidSpine(format!(
            "{kind:?} needs rank at least 2, got {n}"
        )));
    }
    if truncation < 1 {
        return Err(Error::RankExceeded {
            needed: 1,
            truncation,
        });
    }
    let (shape, edges): (Shape, Vec<MonotoneMap>) = match kind {
        SpineKind::G => (Shape::Simplicial, (0..n).map(|k| MonotoneMap::alpha(n, k)).collect()),
        SpineKind::IG => (Shape::Invertible, (0..n).map(|k| MonotoneMap::alpha(n, k)).collect()),
        SpineKind::H => (Shape::Simplicial, (0..n).map(|k| MonotoneMap::gamma(n, k)).collect()),
    };
    let rep = representable(shape, n, truncation);
    let edge_ids: Vec<usize> = edges
        .iter()
        .map(|e| {
            let label = e.values().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            rep.labels(1).iter().position(|l| *l == label).expect("edge is a 1-simplex")
        })
        .collect();
    let (parent, seeds) = if reduced {
        let (r, q) = reduce_with_map(&rep)?;
        let seeds: Vec<usize> = edge_ids.iter().map(|&e| q.apply(1, e)).collect();
        (r, seeds)
    } else {
        (rep, edge_ids)
    };
    SubDiagram::generated(Arc::new(parent), seeds.into_iter().map(|e| (1, e)))
}

/// The `n`-fold fiber product `X_1 ×_{X_0} ⋯ ×_{X_0} X_1`: tuples of edges
/// where each edge ends (face `d_0`) where the next one starts (face `d_1`).
/// Levels are finite sets, so level 0 is always discrete. Tuples are listed
/// lexicographically.
pub fn fiber_power(x: &TruncatedDiagram, n: usize) -> Result<Vec<Vec<usize>>> {
    if x.rank() < 1 {
        return Err(Error::RankExceeded {
            needed: 1,
            truncation: x.rank(),
        });
    }
    if n == 0 {
        return Err(Error::Precondition("fiber power needs n >= 1".into()));
    }
    let start = x.face(1, 1);
    let end = x.face(1, 0);
    let mut by_start: Vec<Vec<usize>> = vec![Vec::new(); x.level_size(0)];
    for e in 0..x.level_size(1) {
        by_start[start[e]].push(e);
    }
    let mut out: Vec<Vec<usize>> = (0..x.level_size(1)).map(|e| vec![e]).collect();
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                let last = *t.last().expect("nonempty");
                by_start[end[last]].iter().map(move |&e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representable_level_counts() {
        assert_eq!(representable(Shape::Simplicial, 2, 1).level_size(1), 6);
        for j in 0..5 {
            let d = representable(Shape::Invertible, 1, j);
            assert_eq!(d.level_size(j), 2 * j + 2);
        }
        assert_eq!(representable(Shape::Simplicial, 3, 0).level_size(0), 4);
        let d = representable(Shape::Invertible, 1, 1);
        assert_eq!(d.nondegenerate(1).len(), 2);
    }

    #[test]
    fn reduce_counts() {
        for j in 0..5 {
            let r = reduce(&representable(Shape::Invertible, 1, j)).unwrap();
            assert_eq!(r.level_size(j), 2 * j + 1);
            assert!(r.audit().passed());
        }
        let r = reduce(&representable(Shape::Simplicial, 1, 2)).unwrap();
        assert_eq!(r.level_size(2), 3);
        let r = reduce(&representable(Shape::Simplicial, 0, 3)).unwrap();
        assert_eq!(r.level_sizes(), vec![1; 4]);
    }

    #[test]
    fn reduce_of_empty_level_zero_fails() {
        let empty = TruncatedDiagram::from_tables(
            Shape::Simplicial,
            vec![Vec::new()],
            vec![Vec::new()],
            vec![Vec::new()],
            Vec::new(),
        )
        .unwrap();
        assert_eq!(reduce(&empty), Err(Error::ReductionUndefined));
    }

    #[test]
    fn spine_level_one_sizes() {
        let g = spine(SpineKind::G, 2, 2, false).unwrap();
        assert_eq!(g.selected(1).len(), 5);
        let ig = spine(SpineKind::IG, 2, 2, true).unwrap();
        let mut labels: Vec<&str> = ig
            .selected(1)
            .iter()
            .map(|&x| ig.parent().label(1, x))
            .collect();
        labels.sort();
        assert_eq!(labels, ["*", "0,1", "1,0", "1,2", "2,1"]);
        let h = spine(SpineKind::H, 2, 2, true).unwrap();
        let mut labels: Vec<&str> = h
            .selected(1)
            .iter()
            .map(|&x| h.parent().label(1, x))
            .collect();
        labels.sort();
        assert_eq!(labels, ["*", "0,1", "0,2"]);
        assert!(spine(SpineKind::G, 1, 2, false).is_err());
    }

    #[test]
    fn fiber_power_of_reduced_diagram_is_a_product() {
        let r = reduce(&representable(Shape::Invertible, 1, 2)).unwrap();
        let m = r.level_size(1);
        assert_eq!(fiber_power(&r, 3).unwrap().len(), m.pow(3));
        assert_eq!(fiber_power(&r, 1).unwrap().len(), m);
    }
}
