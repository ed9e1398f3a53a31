use std::collections::BTreeSet;
use std::sync::Arc;

use super::{DiagramMorphism, Shape, TruncatedDiagram};
use crate::error::{Error, Result};
use crate::index::Generator;

impl TruncatedDiagram {
    /// Generators acting out of level `k`.
    pub fn generators_from(&self, k: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        if k > 0 {
            out.extend((0..=k).map(|index| Generator::Face { rank: k, index }));
        }
        if k < self.rank() {
            out.extend((0..=k).map(|index| Generator::Degeneracy { rank: k, index }));
        }
        if self.shape() == Shape::Invertible {
            out.push(Generator::Flip { rank: k });
        }
        out
    }
}

/// A selection of elements of a parent diagram closed under every action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubDiagram {
    parent: Arc<TruncatedDiagram>,
    selected: Vec<BTreeSet<usize>>,
}

impl SubDiagram {
    /// Wrap a selection, refusing it unless it is closed.
    pub fn new(parent: Arc<TruncatedDiagram>, selected: Vec<BTreeSet<usize>>) -> Result<Self> {
        if selected.len() != parent.rank() + 1 {
            return Err(Error::TruncationMismatch(selected.len().saturating_sub(1), parent.rank()));
        }
        for (k, level) in selected.iter().enumerate() {
            if let Some(&x) = level.iter().find(|&&x| x >= parent.level_size(k)) {
                return Err(Error::NotClosed(format!("level {k} has no element {x}")));
            }
            for &x in level {
                for g in parent.generators_from(k) {
                    let y = parent.act_generator(g, x)?;
                    if !selected[g.to_level()].contains(&y) {
                        return Err(Error::NotClosed(format!(
                            "{g} sends {} to {} outside the selection",
                            parent.label(k, x),
                            parent.label(g.to_level(), y)
                        )));
                    }
                }
            }
        }
        Ok(Self { parent, selected })
    }

    /// The smallest subobject containing the given `(level, element)` pairs.
    pub fn generated(
        parent: Arc<TruncatedDiagram>,
        seeds: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut selected = vec![BTreeSet::new(); parent.rank() + 1];
        let mut stack = Vec::new();
        for (k, x) in seeds {
            if k > parent.rank() {
                return Err(Error::RankExceeded {
                    needed: k,
                    truncation: parent.rank(),
                });
            }
            if x >= parent.level_size(k) {
                return Err(Error::Precondition(format!("level {k} has no element {x}")));
            }
            if selected[k].insert(x) {
                stack.push((k, x));
            }
        }
        while let Some((k, x)) = stack.pop() {
            for g in parent.generators_from(k) {
                let y = parent.act_generator(g, x)?;
                if selected[g.to_level()].insert(y) {
                    stack.push((g.to_level(), y));
                }
            }
        }
        Ok(Self { parent, selected })
    }

    /// The smallest subobject containing a levelwise selection.
    pub fn closure(parent: Arc<TruncatedDiagram>, selected: &[BTreeSet<usize>]) -> Result<Self> {
        let seeds: Vec<(usize, usize)> = selected
            .iter()
            .enumerate()
            .flat_map(|(k, s)| s.iter().map(move |&x| (k, x)))
            .collect();
        Self::generated(parent, seeds)
    }

    pub fn whole(parent: Arc<TruncatedDiagram>) -> Self {
        let selected = (0..=parent.rank())
            .map(|k| (0..parent.level_size(k)).collect())
            .collect();
        Self { parent, selected }
    }

    pub fn parent(&self) -> &TruncatedDiagram {
        &self.parent
    }

    pub fn parent_arc(&self) -> &Arc<TruncatedDiagram> {
        &self.parent
    }

    pub fn selected(&self, k: usize) -> &BTreeSet<usize> {
        &self.selected[k]
    }

    pub fn contains(&self, k: usize, x: usize) -> bool {
        self.selected[k].contains(&x)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.selected.iter().map(BTreeSet::len).collect()
    }

    pub fn is_subset(&self, other: &SubDiagram) -> bool {
        self.selected
            .iter()
            .zip(&other.selected)
            .all(|(a, b)| a.is_subset(b))
    }

    /// The subobject as a diagram in its own right, with its inclusion.
    /// Elements keep the parent's order and labels.
    pub fn to_diagram(&self) -> (TruncatedDiagram, DiagramMorphism) {
        let rank = self.parent.rank();
        let members: Vec<Vec<usize>> = self.selected.iter().map(|s| s.iter().copied().collect()).collect();
        let mut local = Vec::with_capacity(rank + 1);
        for (k, m) in members.iter().enumerate() {
            let mut l = vec![usize::MAX; self.parent.level_size(k)];
            for (i, &x) in m.iter().enumerate() {
                l[x] = i;
            }
            local.push(l);
        }
        let restrict = |k: usize, table: &[usize], to: usize| -> Vec<usize> {
            members[k].iter().map(|&x| local[to][table[x]]).collect()
        };
        let labels = members
            .iter()
            .enumerate()
            .map(|(k, m)| m.iter().map(|&x| self.parent.label(k, x).to_string()).collect())
            .collect();
        let faces = (0..=rank)
            .map(|k| {
                (0..if k == 0 { 0 } else { k + 1 })
                    .map(|i| restrict(k, self.parent.face(k, i), k - 1))
                    .collect()
            })
            .collect();
        let degeneracies = (0..=rank)
            .map(|k| {
                (0..if k == rank { 0 } else { k + 1 })
                    .map(|i| restrict(k, self.parent.degeneracy(k, i), k + 1))
                    .collect()
            })
            .collect();
        let flips = match self.parent.shape() {
            Shape::Simplicial => Vec::new(),
            Shape::Invertible => (0..=rank)
                .map(|k| restrict(k, self.parent.flip(k).expect("invertible"), k))
                .collect(),
        };
        let diagram =
            TruncatedDiagram::from_tables(self.parent.shape(), labels, faces, degeneracies, flips)
                .expect("closed selections restrict to well-formed tables");
        (diagram, DiagramMorphism::new(members))
    }

    /// Pull a subobject of the target back along `f: source -> target`.
    pub fn preimage(
        f: &DiagramMorphism,
        source: Arc<TruncatedDiagram>,
        sub: &SubDiagram,
    ) -> Result<Self> {
        let selected = (0..=source.rank())
            .map(|k| {
                (0..source.level_size(k))
                    .filter(|&x| sub.contains(k, f.apply(k, x)))
                    .collect()
            })
            .collect();
        Self::new(source, selected)
    }

    /// The image of `f: source -> parent` as a subobject of the parent.
    pub fn image(f: &DiagramMorphism, parent: Arc<TruncatedDiagram>) -> Result<Self> {
        let selected = f
            .components()
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        Self::new(parent, selected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::representable;

    #[test]
    fn non_closed_selection_is_refused() {
        let d = Arc::new(representable(Shape::Simplicial, 1, 1));
        let edge = d.labels(1).iter().position(|l| l == "0,1").unwrap();
        let bad = vec![BTreeSet::new(), BTreeSet::from([edge])];
        assert!(matches!(
            SubDiagram::new(d.clone(), bad.clone()),
            Err(Error::NotClosed(_))
        ));
        let closed = SubDiagram::closure(d, &bad).unwrap();
        assert_eq!(closed.level_sizes(), vec![2, 3]);
    }

    #[test]
    fn restriction_round_trips() {
        let d = Arc::new(representable(Shape::Invertible, 2, 2));
        let whole = SubDiagram::whole(d.clone());
        let (copy, inclusion) = whole.to_diagram();
        assert_eq!(&copy, d.as_ref());
        assert!(inclusion.check(&copy, &d).is_ok());
    }
}
