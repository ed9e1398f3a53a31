use std::collections::HashMap;

use serde::Serialize;

use super::{Shape, TruncatedDiagram};
use crate::error::{Error, Result};

/// Levelwise functions between two diagrams. Whether they commute with the
/// actions is checked against a concrete source and target by [`Self::check`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiagramMorphism {
    components: Vec<Vec<usize>>,
}

impl DiagramMorphism {
    pub fn new(components: Vec<Vec<usize>>) -> Self {
        Self { components }
    }

    pub fn identity(d: &TruncatedDiagram) -> Self {
        Self::new((0..=d.rank()).map(|k| (0..d.level_size(k)).collect()).collect())
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &[usize] {
        &self.components[k]
    }

    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.components[k][x]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        Self::new(
            inner
                .components
                .iter()
                .zip(&self.components)
                .map(|(i, o)| i.iter().map(|&x| o[x]).collect())
                .collect(),
        )
    }

    /// Check shapes, ranges and naturality against every generator.
    pub fn check(&self, source: &TruncatedDiagram, target: &TruncatedDiagram) -> Result<()> {
        check_compatible(source, target)?;
        if self.components.len() != source.rank() + 1 {
            return Err(Error::NotNatural("component count differs from the rank".into()));
        }
        for k in 0..=source.rank() {
            let c = &self.components[k];
            if c.len() != source.level_size(k) || c.iter().any(|&y| y >= target.level_size(k)) {
                return Err(Error::NotNatural(format!("component {k} is malformed")));
            }
        }
        for k in 0..=source.rank() {
            for g in source.generators_from(k) {
                let to = g.to_level();
                for x in 0..source.level_size(k) {
                    let lhs = self.apply(to, source.act_generator(g, x)?);
                    let rhs = target.act_generator(g, self.apply(k, x))?;
                    if lhs != rhs {
                        return Err(Error::NotNatural(format!(
                            "{g} on {}: {} vs {}",
                            source.label(k, x),
                            target.label(to, lhs),
                            target.label(to, rhs)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| {
            let mut seen = c.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_surjective_onto(&self, target: &TruncatedDiagram) -> bool {
        self.components.iter().enumerate().all(|(k, c)| {
            let mut hit = vec![false; target.level_size(k)];
            for &y in c {
                hit[y] = true;
            }
            hit.into_iter().all(|h| h)
        })
    }
}

fn check_compatible(a: &TruncatedDiagram, b: &TruncatedDiagram) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::TruncationMismatch(a.rank(), b.rank()));
    }
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", a.shape(), b.shape())));
    }
    Ok(())
}

/// Levelwise disjoint union. Labels are prefixed with the summand index.
pub fn coproduct(
    shape: Shape,
    rank: usize,
    parts: &[&TruncatedDiagram],
) -> Result<(TruncatedDiagram, Vec<DiagramMorphism>)> {
    for p in parts {
        if p.rank() != rank {
            return Err(Error::TruncationMismatch(p.rank(), rank));
        }
        if p.shape() != shape {
            return Err(Error::ShapeMismatch(format!("{} vs {shape}", p.shape())));
        }
    }
    let mut offsets = vec![vec![0; rank + 1]; parts.len()];
    let mut labels = vec![Vec::new(); rank + 1];
    for (pi, p) in parts.iter().enumerate() {
        for k in 0..=rank {
            offsets[pi][k] = labels[k].len();
            labels[k].extend(p.labels(k).iter().map(|l| format!("{pi}.{l}")));
        }
    }
    let glue = |to: usize, table: &dyn Fn(&TruncatedDiagram) -> Vec<usize>| -> Vec<usize> {
        parts
            .iter()
            .enumerate()
            .flat_map(|(pi, p)| {
                let off = offsets[pi][to];
                table(p).into_iter().map(move |y| y + off)
            })
            .collect()
    };
    let faces = (0..=rank)
        .map(|k| {
            (0..if k == 0 { 0 } else { k + 1 })
                .map(|i| glue(k - 1, &|p| p.face(k, i).to_vec()))
                .collect()
        })
        .collect();
    let degeneracies = (0..=rank)
        .map(|k| {
            (0..if k == rank { 0 } else { k + 1 })
                .map(|i| glue(k + 1, &|p| p.degeneracy(k, i).to_vec()))
                .collect()
        })
        .collect();
    let flips = match shape {
        Shape::Simplicial => Vec::new(),
        Shape::Invertible => (0..=rank)
            .map(|k| glue(k, &|p| p.flip(k).expect("invertible").to_vec()))
            .collect(),
    };
    let sum = TruncatedDiagram::from_tables(shape, labels, faces, degeneracies, flips)?;
    let injections = parts
        .iter()
        .enumerate()
        .map(|(pi, p)| {
            DiagramMorphism::new(
                (0..=rank)
                    .map(|k| (0..p.level_size(k)).map(|x| x + offsets[pi][k]).collect())
                    .collect(),
            )
        })
        .collect();
    Ok((sum, injections))
}

#[derive(Debug, Clone)]
pub struct Pushout {
    pub diagram: TruncatedDiagram,
    pub from_b: DiagramMorphism,
    pub from_c: DiagramMorphism,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // the smaller index stays the root, so classes are ordered by
        // their first member
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// The levelwise pushout of `B <-f- A -g-> C`.
///
/// Elements are equivalence classes of `B ⊔ C`, ordered by their first
/// member (elements of `B` before those of `C`) and labelled by it.
pub fn pushout(
    a: &TruncatedDiagram,
    b: &TruncatedDiagram,
    c: &TruncatedDiagram,
    f: &DiagramMorphism,
    g: &DiagramMorphism,
) -> Result<Pushout> {
    f.check(a, b)?;
    g.check(a, c)?;
    check_compatible(b, c)?;
    let rank = a.rank();
    let mut class_of = Vec::with_capacity(rank + 1);
    let mut members: Vec<Vec<usize>> = Vec::with_capacity(rank + 1);
    let mut labels = Vec::with_capacity(rank + 1);
    for k in 0..=rank {
        let nb = b.level_size(k);
        let mut uf = UnionFind::new(nb + c.level_size(k));
        for x in 0..a.level_size(k) {
            uf.union(f.apply(k, x), nb + g.apply(k, x));
        }
        let mut class = vec![usize::MAX; uf.parent.len()];
        let mut reps = Vec::new();
        let mut l = Vec::new();
        for e in 0..uf.parent.len() {
            let root = uf.find(e);
            if root == e {
                class[e] = reps.len();
                reps.push(e);
                l.push(if e < nb {
                    b.label(k, e).to_string()
                } else {
                    c.label(k, e - nb).to_string()
                });
            }
        }
        for e in 0..uf.parent.len() {
            class[e] = class[uf.find(e)];
        }
        class_of.push(class);
        members.push(reps);
        labels.push(l);
    }

    let mut faces = vec![Vec::new(); rank + 1];
    let mut degeneracies = vec![Vec::new(); rank + 1];
    let mut flips = Vec::new();
    for k in 0..=rank {
        let nb = b.level_size(k);
        for gen in b.generators_from(k) {
            let to = gen.to_level();
            let nb_to = b.level_size(to);
            // every member of a class must land in the same class
            let mut table = vec![usize::MAX; members[k].len()];
            for e in 0..class_of[k].len() {
                let image = if e < nb {
                    class_of[to][b.act_generator(gen, e)?]
                } else {
                    class_of[to][nb_to + c.act_generator(gen, e - nb)?]
                };
                let slot = &mut table[class_of[k][e]];
                if *slot == usize::MAX {
                    *slot = image;
                } else if *slot != image {
                    return Err(Error::NotNatural(format!(
                        "{gen} is not well defined on the pushout at level {k}"
                    )));
                }
            }
            match gen {
                crate::index::Generator::Face { .. } => faces[k].push(table),
                crate::index::Generator::Degeneracy { .. } => degeneracies[k].push(table),
                crate::index::Generator::Flip { .. } => flips.push(table),
            }
        }
    }
    let diagram = TruncatedDiagram::from_tables(a.shape(), labels, faces, degeneracies, flips)?;
    let from_b = DiagramMorphism::new(
        (0..=rank)
            .map(|k| (0..b.level_size(k)).map(|x| class_of[k][x]).collect())
            .collect(),
    );
    let from_c = DiagramMorphism::new(
        (0..=rank)
            .map(|k| {
                let nb = b.level_size(k);
                (0..c.level_size(k)).map(|x| class_of[k][nb + x]).collect()
            })
            .collect(),
    );
    Ok(Pushout {
        diagram,
        from_b,
        from_c,
    })
}

/// Options for [`enumerate_maps`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MapSearch {
    /// Only levelwise injective maps.
    pub injective: bool,
    /// Stop after this many maps.
    pub limit: Option<usize>,
}

struct Search<'a> {
    source: &'a TruncatedDiagram,
    target: &'a TruncatedDiagram,
    opts: MapSearch,
    order: Vec<(usize, usize)>,
    /// `(i, z)` with `s_i z = x`, for each `x` at level `k`
    degenerate_from: Vec<Vec<Vec<(usize, usize)>>>,
    assign: Vec<Vec<Option<usize>>>,
    used: Vec<Vec<bool>>,
    found: Vec<DiagramMorphism>,
}

impl Search<'_> {
    fn full(&self) -> bool {
        self.opts.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn consistent(&self, k: usize, x: usize, y: usize) -> bool {
        if self.opts.injective && self.used[k][y] {
            return false;
        }
        if k > 0 {
            for i in 0..=k {
                let below = self.assign[k - 1][self.source.face(k, i)[x]].expect("lower level done");
                if self.target.face(k, i)[y] != below {
                    return false;
                }
            }
        }
        for &(i, z) in &self.degenerate_from[k][x] {
            let below = self.assign[k - 1][z].expect("lower level done");
            if self.target.degeneracy(k - 1, i)[below] != y {
                return false;
            }
        }
        if let (Some(fs), Some(ft)) = (self.source.flip(k), self.target.flip(k)) {
            let partner = fs[x];
            if partner == x {
                if ft[y] != y {
                    return false;
                }
            } else if let Some(py) = self.assign[k][partner] {
                if ft[y] != py {
                    return false;
                }
            }
        }
        true
    }

    fn set(&mut self, k: usize, x: usize, y: Option<usize>) {
        if let Some(old) = self.assign[k][x] {
            self.used[k][old] = false;
        }
        self.assign[k][x] = y;
        if let Some(y) = y {
            self.used[k][y] = true;
        }
    }

    fn go(&mut self, pos: usize) {
        if self.full() {
            return;
        }
        let Some(&(k, x)) = self.order.get(pos) else {
            let components = self
                .assign
                .iter()
                .map(|l| l.iter().map(|y| y.expect("complete")).collect())
                .collect();
            self.found.push(DiagramMorphism::new(components));
            return;
        };
        if self.assign[k][x].is_some() {
            self.go(pos + 1);
            return;
        }
        let candidates: Vec<usize> = match self.degenerate_from[k][x].first() {
            Some(&(i, z)) => {
                vec![self.target.degeneracy(k - 1, i)[self.assign[k - 1][z].expect("done")]]
            }
            None => (0..self.target.level_size(k)).collect(),
        };
        for y in candidates {
            if !self.consistent(k, x, y) {
                continue;
            }
            self.set(k, x, Some(y));
            // a flip partner is forced as soon as x is placed
            let partner = self
                .source
                .flip(k)
                .map(|fs| fs[x])
                .filter(|&p| p != x && self.assign[k][p].is_none());
            let mut partner_ok = true;
            if let Some(p) = partner {
                let py = self.target.flip(k).expect("same shape")[y];
                partner_ok = self.consistent(k, p, py);
                if partner_ok {
                    self.set(k, p, Some(py));
                }
            }
            if partner_ok {
                self.go(pos + 1);
                if let Some(p) = partner {
                    self.set(k, p, None);
                }
            }
            self.set(k, x, None);
            if self.full() {
                return;
            }
        }
    }
}

/// Every natural transformation `source -> target`, by backtracking level by
/// level. Output order is deterministic.
pub fn enumerate_maps(
    source: &TruncatedDiagram,
    target: &TruncatedDiagram,
    opts: MapSearch,
) -> Result<Vec<DiagramMorphism>> {
    check_compatible(source, target)?;
    let rank = source.rank();
    let mut degenerate_from = vec![Vec::new(); rank + 1];
    for k in 0..=rank {
        degenerate_from[k] = vec![Vec::new(); source.level_size(k)];
        if k > 0 {
            for i in 0..k {
                for (z, &x) in source.degeneracy(k - 1, i).iter().enumerate() {
                    degenerate_from[k][x].push((i, z));
                }
            }
        }
    }
    let order = (0..=rank)
        .flat_map(|k| (0..source.level_size(k)).map(move |x| (k, x)))
        .collect();
    let mut search = Search {
        source,
        target,
        opts,
        order,
        degenerate_from,
        assign: (0..=rank).map(|k| vec![None; source.level_size(k)]).collect(),
        used: (0..=rank).map(|k| vec![false; target.level_size(k)]).collect(),
        found: Vec::new(),
    };
    search.go(0);
    Ok(search.found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum IsoResult {
    Isomorphic { witness: DiagramMorphism },
    NotIsomorphic { reason: String },
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Isomorphic { .. })
    }
}

/// Decide isomorphism, returning an explicit natural bijection when one
/// exists. A label-matching bijection is tried first; otherwise the search
/// is exhaustive, so a negative answer is certified.
pub fn iso_check(d1: &TruncatedDiagram, d2: &TruncatedDiagram) -> Result<IsoResult> {
    check_compatible(d1, d2)?;
    if d1.level_sizes() != d2.level_sizes() {
        return Ok(IsoResult::NotIsomorphic {
            reason: format!(
                "level sizes differ: {:?} vs {:?}",
                d1.level_sizes(),
                d2.level_sizes()
            ),
        });
    }
    if let Some(candidate) = label_matching(d1, d2) {
        if candidate.check(d1, d2).is_ok() {
            return Ok(IsoResult::Isomorphic { witness: candidate });
        }
    }
    let found = enumerate_maps(
        d1,
        d2,
        MapSearch {
            injective: true,
            limit: Some(1),
        },
    )?;
    Ok(match found.into_iter().next() {
        Some(witness) => IsoResult::Isomorphic { witness },
        None => IsoResult::NotIsomorphic {
            reason: "no natural bijection exists".into(),
        },
    })
}

fn label_matching(d1: &TruncatedDiagram, d2: &TruncatedDiagram) -> Option<DiagramMorphism> {
    let mut components = Vec::new();
    for k in 0..=d1.rank() {
        let index: HashMap<&str, usize> = d2
            .labels(k)
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != d2.level_size(k) {
            return None;
        }
        let c: Option<Vec<usize>> = d1.labels(k).iter().map(|l| index.get(l.as_str()).copied()).collect();
        components.push(c?);
    }
    let m = DiagramMorphism::new(components);
    m.is_injective().then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::{reduce, representable, terminal};

    #[test]
    fn pushout_of_points_is_a_point() {
        let p = terminal(Shape::Simplicial, 2);
        let id = DiagramMorphism::identity(&p);
        let po = pushout(&p, &p, &p, &id, &id).unwrap();
        assert_eq!(po.diagram.level_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn gluing_two_intervals() {
        let pt = representable(Shape::Simplicial, 0, 2);
        let interval = representable(Shape::Simplicial, 1, 2);
        // end of the first interval, start of the second
        let vertex = |v: usize| {
            let maps = enumerate_maps(&pt, &interval, MapSearch::default()).unwrap();
            maps.into_iter()
                .find(|m| interval.label(0, m.apply(0, 0)) == v.to_string())
                .unwrap()
        };
        let po = pushout(&pt, &interval, &interval, &vertex(1), &vertex(0)).unwrap();
        assert_eq!(po.diagram.level_size(1), 5);
        assert!(po.diagram.audit().passed());
    }

    #[test]
    fn pushout_along_identity() {
        let a = representable(Shape::Invertible, 1, 2);
        let b = representable(Shape::Invertible, 2, 2);
        let f = enumerate_maps(&a, &b, MapSearch::default()).unwrap().remove(3);
        let po = pushout(&a, &b, &a, &f, &DiagramMorphism::identity(&a)).unwrap();
        assert!(iso_check(&po.diagram, &b).unwrap().is_iso());
    }

    #[test]
    fn reduced_interval_automorphisms() {
        let r = reduce(&representable(Shape::Invertible, 1, 3)).unwrap();
        let autos = enumerate_maps(
            &r,
            &r,
            MapSearch {
                injective: true,
                limit: None,
            },
        )
        .unwrap();
        assert!(autos.contains(&DiagramMorphism::identity(&r)));
        // postcomposition with the flip of I[1] complements every value
        let complement = |l: &str| -> String {
            l.split(',')
                .map(|v| if v == "0" { "1" } else if v == "1" { "0" } else { v })
                .collect::<Vec<_>>()
                .join(",")
        };
        let flip = DiagramMorphism::new(
            (0..=3)
                .map(|k| {
                    r.labels(k)
                        .iter()
                        .map(|l| r.labels(k).iter().position(|m| *m == complement(l)).unwrap())
                        .collect()
                })
                .collect(),
        );
        assert!(flip.check(&r, &r).is_ok());
        assert!(autos.contains(&flip));
        assert_eq!(autos.len(), 2);
    }

    #[test]
    fn self_iso_and_non_iso() {
        let a = representable(Shape::Simplicial, 2, 2);
        assert!(iso_check(&a, &a).unwrap().is_iso());
        let b = representable(Shape::Simplicial, 1, 2);
        assert!(!iso_check(&a, &b).unwrap().is_iso());
        let c = representable(Shape::Simplicial, 1, 1);
        assert!(matches!(iso_check(&a, &c), Err(Error::TruncationMismatch(2, 1))));
    }
}
