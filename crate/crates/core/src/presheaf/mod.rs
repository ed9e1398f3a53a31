//! Finite, truncated set-valued diagrams on Δ^op and IΔ^op.
//!
//! A [`TruncatedDiagram`] stores levels `0..=N` and the action of the
//! generating morphisms (faces, degeneracies, flips). The action of an
//! arbitrary morphism is derived from its generator decomposition.

mod construct;
mod dump;
mod maps;
mod sub;

pub use construct::{fiber_power, reduce, reduce_with_map, representable, spine, terminal, SpineKind};
pub use dump::{DiagramDump, GeneratorTable, LevelDump};
pub use maps::{coproduct, enumerate_maps, iso_check, pushout, DiagramMorphism, IsoResult, MapSearch, Pushout};
pub use sub::SubDiagram;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{DecoratedMap, Generator, InvMonotoneMap, MonotoneMap, Morphism};

/// Which index category a diagram lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// Δ^op
    Simplicial,
    /// IΔ^op
    Invertible,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Simplicial => "simplicial",
            Shape::Invertible => "invertible",
        })
    }
}

/// Something that can say how every index morphism acts, level by level.
///
/// This is the direct description of a diagram (nerves compute it by path
/// products); [`TruncatedDiagram::materialize`] records the generator actions
/// and [`TruncatedDiagram::cross_check`] compares the two routes.
pub trait SimplicialModel {
    fn shape(&self) -> Shape;
    fn level_size(&self, level: usize) -> usize;
    fn label(&self, level: usize, element: usize) -> String;
    /// `X(θ)` for `θ: [m] -> [k]`, applied to `element` of level `k`.
    fn act(&self, theta: &InvMonotoneMap, element: usize) -> Result<usize>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedDiagram {
    shape: Shape,
    rank: usize,
    labels: Vec<Vec<String>>,
    /// `faces[k][i]`: `X_k -> X_{k-1}`, for `1 <= k <= rank`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[k][i]`: `X_k -> X_{k+1}`, for `k < rank`.
    degeneracies: Vec<Vec<Vec<usize>>>,
    /// `flips[k]`: `X_k -> X_k`; empty for simplicial diagrams.
    flips: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub morphisms: usize,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_AUDIT_FAILURES: usize = 16;

impl TruncatedDiagram {
    /// Assemble a diagram from generator tables, validating their shapes and
    /// ranges. Functoriality is not checked here; see [`Self::audit`].
    pub fn from_tables(
        shape: Shape,
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
        flips: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Precondition("a diagram needs level 0".into()));
        }
        let rank = labels.len() - 1;
        let size = |k: usize| labels[k].len();
        let bad = |what: String| Err(Error::InvalidStructure(what));
        if faces.len() != rank + 1 || degeneracies.len() != rank + 1 {
            return bad("generator tables do not cover every level".into());
        }
        for k in 0..=rank {
            let expected_faces = if k == 0 { 0 } else { k + 1 };
            if faces[k].len() != expected_faces {
                return bad(format!("level {k} needs {expected_faces} faces"));
            }
            for (i, t) in faces[k].iter().enumerate() {
                if t.len() != size(k) || t.iter().any(|&y| y >= size(k - 1)) {
                    return bad(format!("face {i} at level {k} is malformed"));
                }
            }
            let expected_degs = if k == rank { 0 } else { k + 1 };
            if degeneracies[k].len() != expected_degs {
                return bad(format!("level {k} needs {expected_degs} degeneracies"));
            }
            for (i, t) in degeneracies[k].iter().enumerate() {
                if t.len() != size(k) || t.iter().any(|&y| y >= size(k + 1)) {
                    return bad(format!("degeneracy {i} at level {k} is malformed"));
                }
            }
        }
        match shape {
            Shape::Simplicial if !flips.is_empty() => {
                return bad("simplicial diagrams carry no flips".into())
            }
            Shape::Invertible if flips.len() != rank + 1 => {
                return bad("every level needs a flip".into())
            }
            _ => {}
        }
        for (k, t) in flips.iter().enumerate() {
            if t.len() != size(k) || t.iter().any(|&y| y >= size(k)) {
                return bad(format!("flip at level {k} is malformed"));
            }
        }
        Ok(Self {
            shape,
            rank,
            labels,
            faces,
            degeneracies,
            flips,
        })
    }

    /// Record the generator actions of a model up to rank `truncation`.
    pub fn materialize(model: &dyn SimplicialModel, truncation: usize) -> Result<Self> {
        let shape = model.shape();
        let labels: Vec<Vec<String>> = (0..=truncation)
            .map(|k| (0..model.level_size(k)).map(|x| model.label(k, x)).collect())
            .collect();
        let table = |g: Generator, k: usize| -> Result<Vec<usize>> {
            let map = g.as_map();
            (0..labels[k].len()).map(|x| model.act(&map, x)).collect()
        };
        let mut faces = vec![Vec::new(); truncation + 1];
        let mut degeneracies = vec![Vec::new(); truncation + 1];
        let mut flips = Vec::new();
        for k in 0..=truncation {
            if k > 0 {
                for i in 0..=k {
                    faces[k].push(table(Generator::Face { rank: k, index: i }, k)?);
                }
            }
            if k < truncation {
                for i in 0..=k {
                    degeneracies[k].push(table(Generator::Degeneracy { rank: k, index: i }, k)?);
                }
            }
            if shape == Shape::Invertible {
                flips.push(table(Generator::Flip { rank: k }, k)?);
            }
        }
        Self::from_tables(shape, labels, faces, degeneracies, flips)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// The truncation rank `N`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level_size(&self, k: usize) -> usize {
        self.labels[k].len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, k: usize, x: usize) -> &str {
        &self.labels[k][x]
    }

    pub fn labels(&self, k: usize) -> &[String] {
        &self.labels[k]
    }

    pub fn face(&self, k: usize, i: usize) -> &[usize] {
        &self.faces[k][i]
    }

    pub fn degeneracy(&self, k: usize, i: usize) -> &[usize] {
        &self.degeneracies[k][i]
    }

    /// Flip table at level `k`, if the diagram is invertible.
    pub fn flip(&self, k: usize) -> Option<&[usize]> {
        self.flips.get(k).map(Vec::as_slice)
    }

    fn check_rank(&self, k: usize) -> Result<()> {
        if k > self.rank {
            return Err(Error::RankExceeded {
                needed: k,
                truncation: self.rank,
            });
        }
        Ok(())
    }

    /// Apply a single generator.
    pub fn act_generator(&self, g: Generator, x: usize) -> Result<usize> {
        self.check_rank(g.from_level().max(g.to_level()))?;
        Ok(match g {
            Generator::Face { rank, index } => self.faces[rank][index][x],
            Generator::Degeneracy { rank, index } => self.degeneracies[rank][index][x],
            Generator::Flip { rank } => match self.flips.get(rank) {
                Some(t) => t[x],
                None => {
                    return Err(Error::ShapeMismatch(
                        "flips do not act on a simplicial diagram".into(),
                    ))
                }
            },
        })
    }

    /// `X(θ)(x)` for `θ: [m] -> [k]` and `x ∈ X_k`.
    pub fn act(&self, theta: &InvMonotoneMap, x: usize) -> Result<usize> {
        self.check_rank(theta.source().max(theta.target()))?;
        if self.shape == Shape::Simplicial && !theta.is_ascending() {
            return Err(Error::ShapeMismatch(format!(
                "{theta} does not act on a simplicial diagram"
            )));
        }
        // θ = g_0 ∘ g_1 ∘ …, so X(g_0) is applied first
        theta
            .decompose()
            .into_iter()
            .try_fold(x, |y, g| self.act_generator(g, y))
    }

    pub fn act_delta(&self, theta: &MonotoneMap, x: usize) -> Result<usize> {
        self.act(&theta.clone().into(), x)
    }

    /// Act by a decorated map, checking that `x` carries its target objects.
    pub fn act_decorated(&self, theta: &DecoratedMap, x: usize) -> Result<usize> {
        let k = theta.underlying().target();
        if self.vertices(k, x)? != theta.target_objects() {
            return Err(Error::Precondition(format!(
                "{theta} does not act on {}: vertices {:?}",
                self.labels[k][x],
                self.vertices(k, x)?
            )));
        }
        let y = self.act(theta.underlying(), x)?;
        debug_assert_eq!(
            self.vertices(theta.underlying().source(), y).ok().as_deref(),
            Some(theta.source_objects())
        );
        Ok(y)
    }

    /// The whole function `X(θ): X_k -> X_m`.
    pub fn action_table(&self, theta: &InvMonotoneMap) -> Result<Vec<usize>> {
        (0..self.level_size(theta.target()))
            .map(|x| self.act(theta, x))
            .collect()
    }

    /// The vertices `(v_0, …, v_k)` of `x ∈ X_k`, as level-0 elements.
    pub fn vertices(&self, k: usize, x: usize) -> Result<Vec<usize>> {
        (0..=k)
            .map(|i| self.act_delta(&MonotoneMap::vertex(k, i), x))
            .collect()
    }

    /// Elements of level `k` that are not degeneracies of level `k-1`.
    pub fn nondegenerate(&self, k: usize) -> Vec<usize> {
        if k == 0 {
            return (0..self.level_size(0)).collect();
        }
        let mut degenerate = vec![false; self.level_size(k)];
        for t in &self.degeneracies[k - 1] {
            for &y in t {
                degenerate[y] = true;
            }
        }
        (0..self.level_size(k)).filter(|&x| !degenerate[x]).collect()
    }

    /// Forget the flips.
    pub fn restrict_to_ascending(&self) -> Self {
        Self {
            shape: Shape::Simplicial,
            flips: Vec::new(),
            ..self.clone()
        }
    }

    fn morphisms(&self) -> Vec<InvMonotoneMap> {
        let mut out = Vec::new();
        for m in 0..=self.rank {
            for k in 0..=self.rank {
                match self.shape {
                    Shape::Simplicial => {
                        out.extend(MonotoneMap::hom(m, k).into_iter().map(InvMonotoneMap::from))
                    }
                    Shape::Invertible => out.extend(InvMonotoneMap::hom(m, k)),
                }
            }
        }
        out
    }

    /// Functoriality audit: `X(f ∘ g) = X(g) ∘ X(f)` for every composable
    /// pair of morphisms between ranks `<= N`, with each action computed from
    /// its own generator decomposition.
    pub fn audit(&self) -> AuditReport {
        let morphisms = self.morphisms();
        let tables: Vec<Vec<usize>> = morphisms
            .iter()
            .map(|f| self.action_table(f).expect("within truncation"))
            .collect();
        let index: std::collections::HashMap<&InvMonotoneMap, usize> =
            morphisms.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut failures = Vec::new();
        let mut pairs = 0;
        for (fi, f) in morphisms.iter().enumerate() {
            for (gi, g) in morphisms.iter().enumerate() {
                if g.target() != f.source() {
                    continue;
                }
                pairs += 1;
                let fg = index[&f.compose(g).expect("composable")];
                let ok = tables[fi]
                    .iter()
                    .enumerate()
                    .all(|(x, &y)| tables[fg][x] == tables[gi][y]);
                if !ok && failures.len() < MAX_AUDIT_FAILURES {
                    failures.push(format!("X({f} ∘ {g}) differs from X({g}) X({f})"));
                }
            }
        }
        AuditReport {
            morphisms: morphisms.len(),
            pairs_checked: pairs,
            failures,
        }
    }

    /// Compare every derived action with the model's direct action.
    pub fn cross_check(&self, model: &dyn SimplicialModel) -> AuditReport {
        let morphisms = self.morphisms();
        let mut failures = Vec::new();
        for theta in &morphisms {
            for x in 0..self.level_size(theta.target()) {
                let direct = model.act(theta, x);
                let derived = self.act(theta, x);
                if direct != derived && failures.len() < MAX_AUDIT_FAILURES {
                    failures.push(format!(
                        "{theta} on {}: direct {direct:?}, via generators {derived:?}",
                        self.labels[theta.target()][x]
                    ));
                }
            }
        }
        AuditReport {
            morphisms: morphisms.len(),
            pairs_checked: 0,
            failures,
        }
    }

    /// The same diagram with fewer levels.
    pub fn truncate(&self, rank: usize) -> Result<Self> {
        self.check_rank(rank)?;
        let mut degeneracies = self.degeneracies[..=rank].to_vec();
        degeneracies[rank].clear();
        Ok(Self {
            shape: self.shape,
            rank,
            labels: self.labels[..=rank].to_vec(),
            faces: self.faces[..=rank].to_vec(),
            degeneracies,
            flips: if self.flips.is_empty() {
                Vec::new()
            } else {
                self.flips[..=rank].to_vec()
            },
        })
    }

    /// Rename every element; used when labels carry structure elsewhere.
    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.iter().map(Vec::len).ne(self.labels.iter().map(Vec::len)) {
            return Err(Error::Precondition("label shape differs from the diagram".into()));
        }
        self.labels = labels;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representable_passes_the_audit() {
        for shape in [Shape::Simplicial, Shape::Invertible] {
            let d = representable(shape, 2, 3);
            let report = d.audit();
            assert!(report.passed(), "{:?}", report.failures);
            assert!(report.pairs_checked > 0);
        }
    }

    #[test]
    fn vertices_of_an_edge() {
        let d = representable(Shape::Simplicial, 2, 2);
        let x = d.labels(1).iter().position(|l| l == "0,2").unwrap();
        let v = d.vertices(1, x).unwrap();
        assert_eq!(d.label(0, v[0]), "0");
        assert_eq!(d.label(0, v[1]), "2");
    }

    #[test]
    fn acting_beyond_truncation_fails() {
        let d = representable(Shape::Simplicial, 1, 1);
        let s = MonotoneMap::degeneracy(1, 0);
        assert!(matches!(
            d.act_delta(&s, 0),
            Err(Error::RankExceeded { needed: 2, truncation: 1 })
        ));
    }

    #[test]
    fn flips_do_not_act_on_simplicial_diagrams() {
        let d = representable(Shape::Simplicial, 1, 1);
        assert!(d.act(&InvMonotoneMap::flip(1), 0).is_err());
    }

    #[test]
    fn truncation_drops_top_degeneracies() {
        let d = representable(Shape::Invertible, 1, 3).truncate(2).unwrap();
        assert_eq!(d.rank(), 2);
        assert!(d.audit().passed());
    }
}
