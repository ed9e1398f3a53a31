//! Nerves of monoids, groups, groupoids and free groups.
//!
//! A `k`-simplex is a start object and a composable path of `k` arrows. A
//! morphism `θ: [m] -> [k]` acts by path products: entry `i` of the result
//! is the product of the arrows between vertices `θ(i-1)` and `θ(i)`, read
//! backwards and inverted when `θ` steps down.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::algebra::{FinGroup, FinGroupoid, FinMonoid, FreeWord};
use crate::error::{Error, Result};
use crate::index::{InvMonotoneMap, Morphism};
use crate::presheaf::{Shape, SimplicialModel, TruncatedDiagram};

/// Arrows with composition, enough to form path products.
pub trait PathAlgebra {
    type Arrow: Clone + Eq + Hash + Ord + Debug;

    fn objects(&self) -> usize;
    fn source(&self, a: &Self::Arrow) -> usize;
    fn target(&self, a: &Self::Arrow) -> usize;
    fn identity(&self, object: usize) -> Self::Arrow;
    /// `a` followed by `b`.
    fn then(&self, a: &Self::Arrow, b: &Self::Arrow) -> Self::Arrow;
    fn inverse(&self, a: &Self::Arrow) -> Option<Self::Arrow>;
    /// Arrows out of `object` that may appear in a simplex, in a fixed order.
    fn arrows_from(&self, object: usize) -> Vec<Self::Arrow>;
    /// Size of an arrow against the simplex budget; zero when unbounded.
    fn cost(&self, _a: &Self::Arrow) -> usize {
        0
    }
    fn render(&self, a: &Self::Arrow) -> String;
}

impl PathAlgebra for FinMonoid {
    type Arrow = usize;

    fn objects(&self) -> usize {
        1
    }
    fn source(&self, _: &usize) -> usize {
        0
    }
    fn target(&self, _: &usize) -> usize {
        0
    }
    fn identity(&self, _: usize) -> usize {
        FinMonoid::identity(self)
    }
    fn then(&self, a: &usize, b: &usize) -> usize {
        self.mul(*a, *b)
    }
    fn inverse(&self, a: &usize) -> Option<usize> {
        self.inverse_of(*a)
    }
    fn arrows_from(&self, _: usize) -> Vec<usize> {
        (0..self.order()).collect()
    }
    fn render(&self, a: &usize) -> String {
        a.to_string()
    }
}

impl PathAlgebra for FinGroup {
    type Arrow = usize;

    fn objects(&self) -> usize {
        1
    }
    fn source(&self, _: &usize) -> usize {
        0
    }
    fn target(&self, _: &usize) -> usize {
        0
    }
    fn identity(&self, _: usize) -> usize {
        FinGroup::identity(self)
    }
    fn then(&self, a: &usize, b: &usize) -> usize {
        self.mul(*a, *b)
    }
    fn inverse(&self, a: &usize) -> Option<usize> {
        Some(self.inv(*a))
    }
    fn arrows_from(&self, _: usize) -> Vec<usize> {
        (0..self.order()).collect()
    }
    fn render(&self, a: &usize) -> String {
        a.to_string()
    }
}

impl PathAlgebra for FinGroupoid {
    type Arrow = usize;

    fn objects(&self) -> usize {
        FinGroupoid::objects(self)
    }
    fn source(&self, a: &usize) -> usize {
        FinGroupoid::source(self, *a)
    }
    fn target(&self, a: &usize) -> usize {
        FinGroupoid::target(self, *a)
    }
    fn identity(&self, object: usize) -> usize {
        FinGroupoid::identity(self, object)
    }
    fn then(&self, a: &usize, b: &usize) -> usize {
        FinGroupoid::then(self, *a, *b).expect("paths are composable")
    }
    fn inverse(&self, a: &usize) -> Option<usize> {
        Some(self.inv(*a))
    }
    fn arrows_from(&self, object: usize) -> Vec<usize> {
        self.morphisms_from(object).collect()
    }
    fn render(&self, a: &usize) -> String {
        a.to_string()
    }
}

/// The free group on `generators` letters, with simplices limited to total
/// word length `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeGroup {
    pub generators: usize,
    pub bound: usize,
}

impl PathAlgebra for FreeGroup {
    type Arrow = FreeWord;

    fn objects(&self) -> usize {
        1
    }
    fn source(&self, _: &FreeWord) -> usize {
        0
    }
    fn target(&self, _: &FreeWord) -> usize {
        0
    }
    fn identity(&self, _: usize) -> FreeWord {
        FreeWord::identity(self.generators)
    }
    fn then(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.multiply(b)
    }
    fn inverse(&self, a: &FreeWord) -> Option<FreeWord> {
        Some(a.invert())
    }
    fn arrows_from(&self, _: usize) -> Vec<FreeWord> {
        (0..=self.bound)
            .flat_map(|l| FreeWord::all_of_length(self.generators, l))
            .collect()
    }
    fn cost(&self, a: &FreeWord) -> usize {
        a.len()
    }
    fn render(&self, a: &FreeWord) -> String {
        a.to_string()
    }
}

/// A start object and a composable path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex<A> {
    pub start: usize,
    pub arrows: Vec<A>,
}

/// The (invertible) nerve of a path algebra, materialized up to a rank.
pub struct Nerve<A: PathAlgebra> {
    algebra: A,
    shape: Shape,
    budget: Option<usize>,
    levels: Vec<Vec<Simplex<A::Arrow>>>,
    index: Vec<HashMap<Simplex<A::Arrow>, usize>>,
}

impl<A: PathAlgebra> Nerve<A> {
    /// Enumerate simplices up to `truncation`. With a `budget`, only
    /// simplices whose arrow costs sum to at most the budget are kept.
    pub fn new(algebra: A, shape: Shape, truncation: usize, budget: Option<usize>) -> Result<Self> {
        if shape == Shape::Invertible {
            for x in 0..algebra.objects() {
                if let Some(a) = algebra
                    .arrows_from(x)
                    .into_iter()
                    .find(|a| algebra.inverse(a).is_none())
                {
                    return Err(Error::Precondition(format!(
                        "{} has no inverse, so there is no invertible nerve",
                        algebra.render(&a)
                    )));
                }
            }
        }
        let arrows: Vec<Vec<A::Arrow>> = (0..algebra.objects()).map(|x| algebra.arrows_from(x)).collect();
        let mut levels: Vec<Vec<Simplex<A::Arrow>>> = vec![(0..algebra.objects())
            .map(|x| Simplex {
                start: x,
                arrows: Vec::new(),
            })
            .collect()];
        // track (end object, spent budget) alongside each simplex
        let mut frontier: Vec<(usize, usize)> = (0..algebra.objects()).map(|x| (x, 0)).collect();
        for _ in 1..=truncation {
            let prev = levels.last().expect("level 0");
            let mut next = Vec::new();
            let mut next_frontier = Vec::new();
            for (s, &(end, spent)) in prev.iter().zip(&frontier) {
                for a in &arrows[end] {
                    let total = spent + algebra.cost(a);
                    if budget.is_some_and(|b| total > b) {
                        continue;
                    }
                    let mut t = s.clone();
                    t.arrows.push(a.clone());
                    next.push(t);
                    next_frontier.push((algebra.target(a), total));
                }
            }
            levels.push(next);
            frontier = next_frontier;
        }
        let index = levels
            .iter()
            .map(|l| l.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        Ok(Self {
            algebra,
            shape,
            budget,
            levels,
            index,
        })
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn simplex(&self, level: usize, element: usize) -> &Simplex<A::Arrow> {
        &self.levels[level][element]
    }

    pub fn simplices(&self, level: usize) -> &[Simplex<A::Arrow>] {
        &self.levels[level]
    }

    pub fn index_of(&self, level: usize, s: &Simplex<A::Arrow>) -> Option<usize> {
        self.index.get(level)?.get(s).copied()
    }

    /// Objects `x_0, …, x_k` along a simplex.
    pub fn vertices(&self, s: &Simplex<A::Arrow>) -> Vec<usize> {
        std::iter::once(s.start)
            .chain(s.arrows.iter().map(|a| self.algebra.target(a)))
            .collect()
    }

    /// `θ^* s` by path products, for a simplex of any length.
    pub fn act_on_simplex(
        &self,
        theta: &InvMonotoneMap,
        s: &Simplex<A::Arrow>,
    ) -> Result<Simplex<A::Arrow>> {
        if theta.target() != s.arrows.len() {
            return Err(Error::Precondition(format!(
                "{theta} does not act on a {}-simplex",
                s.arrows.len()
            )));
        }
        let vertices = self.vertices(s);
        let path = |from: usize, to: usize| -> Result<A::Arrow> {
            if from <= to {
                Ok(s.arrows[from..to]
                    .iter()
                    .fold(self.algebra.identity(vertices[from]), |acc, a| {
                        self.algebra.then(&acc, a)
                    }))
            } else {
                let forward = s.arrows[to..from]
                    .iter()
                    .fold(self.algebra.identity(vertices[to]), |acc, a| {
                        self.algebra.then(&acc, a)
                    });
                self.algebra.inverse(&forward).ok_or_else(|| {
                    Error::Precondition(format!(
                        "{theta} needs the inverse of {}",
                        self.algebra.render(&forward)
                    ))
                })
            }
        };
        let v = theta.values();
        let arrows = (1..v.len())
            .map(|i| path(v[i - 1], v[i]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Simplex {
            start: vertices[v[0]],
            arrows,
        })
    }

    pub fn render(&self, s: &Simplex<A::Arrow>) -> String {
        let bar: Vec<String> = s.arrows.iter().map(|a| self.algebra.render(a)).collect();
        if self.algebra.objects() > 1 {
            format!("({})@{}", bar.join("|"), s.start)
        } else {
            format!("({})", bar.join("|"))
        }
    }

    pub fn diagram(&self) -> TruncatedDiagram {
        TruncatedDiagram::materialize(self, self.rank()).expect("nerve actions stay in range")
    }
}

impl<A: PathAlgebra> SimplicialModel for Nerve<A> {
    fn shape(&self) -> Shape {
        self.shape
    }

    fn level_size(&self, level: usize) -> usize {
        self.levels[level].len()
    }

    fn label(&self, level: usize, element: usize) -> String {
        self.render(&self.levels[level][element])
    }

    fn act(&self, theta: &InvMonotoneMap, element: usize) -> Result<usize> {
        let s = &self.levels[theta.target()][element];
        let image = self.act_on_simplex(theta, s)?;
        self.index_of(theta.source(), &image).ok_or_else(|| Error::BoundExceeded {
            bound: self.budget.unwrap_or(0),
            morphism: theta.to_string(),
            element: self.render(s),
        })
    }
}

/// `nerve(M)` over Δ^op.
pub fn nerve(m: &FinMonoid, truncation: usize) -> TruncatedDiagram {
    Nerve::new(m.clone(), Shape::Simplicial, truncation, None)
        .expect("simplicial nerves need no inverses")
        .diagram()
}

/// `Inerve(G)` over IΔ^op.
pub fn inerve(g: &FinGroup, truncation: usize) -> TruncatedDiagram {
    Nerve::new(g.clone(), Shape::Invertible, truncation, None)
        .expect("groups have inverses")
        .diagram()
}

/// The decorated invertible nerve of a groupoid: level 0 is the object set
/// and each simplex sits over its vertex tuple.
pub fn inerve_groupoid(g: &FinGroupoid, truncation: usize) -> TruncatedDiagram {
    Nerve::new(g.clone(), Shape::Invertible, truncation, None)
        .expect("groupoids have inverses")
        .diagram()
}

/// The nerve of the free group over Δ^op, simplices of total length `<= bound`.
pub fn nerve_free(generators: usize, truncation: usize, bound: usize) -> Result<TruncatedDiagram> {
    free(generators, Shape::Simplicial, truncation, bound)
}

/// The invertible nerve of the free group, simplices of total length `<= bound`.
pub fn inerve_free(generators: usize, truncation: usize, bound: usize) -> Result<TruncatedDiagram> {
    free(generators, Shape::Invertible, truncation, bound)
}

fn free(generators: usize, shape: Shape, truncation: usize, bound: usize) -> Result<TruncatedDiagram> {
    if generators == 0 || bound == 0 {
        return Err(Error::Precondition(
            "free nerves need at least one generator and a positive word bound".into(),
        ));
    }
    let model = Nerve::new(FreeGroup { generators, bound }, shape, truncation, Some(bound))?;
    TruncatedDiagram::materialize(&model, truncation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(d: &TruncatedDiagram, k: usize, label: &str) -> usize {
        d.labels(k).iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn faces_and_degeneracies_of_a_monoid_nerve() {
        let z3 = FinMonoid::cyclic(3);
        let d = nerve(&z3, 2);
        let ab = find(&d, 2, "(1|2)");
        assert_eq!(d.label(1, d.face(2, 1)[ab]), "(0)");
        assert_eq!(d.label(1, d.face(2, 0)[ab]), "(2)");
        assert_eq!(d.label(1, d.face(2, 2)[ab]), "(1)");
        let a = find(&d, 1, "(2)");
        assert_eq!(d.label(2, d.degeneracy(1, 0)[a]), "(0|2)");
        assert_eq!(d.level_sizes(), vec![1, 3, 9]);
    }

    #[test]
    fn flip_in_z3() {
        let d = inerve(&FinGroup::cyclic(3), 2);
        let x = find(&d, 2, "(1|2)");
        assert_eq!(d.label(2, d.flip(2).unwrap()[x]), "(1|2)");
        let y = find(&d, 2, "(1|1)");
        assert_eq!(d.label(2, d.flip(2).unwrap()[y]), "(2|2)");
    }

    #[test]
    fn free_nerve_examples() {
        let d = inerve_free(1, 2, 2).unwrap();
        let x_xinv = find(&d, 2, "(x|x^-1)");
        assert_eq!(d.label(1, d.face(2, 1)[x_xinv]), "(1)");
        let e = find(&d, 2, "(x^2|1)");
        assert_eq!(d.label(2, d.flip(2).unwrap()[e]), "(1|x^-2)");
        // n = 1, level 2 with |a| + |b| <= 2
        let brute = (-2i64..=2)
            .flat_map(|a| (-2i64..=2).map(move |b| (a, b)))
            .filter(|(a, b)| a.abs() + b.abs() <= 2)
            .count();
        assert_eq!(d.level_size(2), brute);
        assert!(d.audit().passed());
    }

    #[test]
    fn direct_and_derived_actions_agree() {
        let g = FinGroup::try_from_monoid(
            crate::algebra::curated()
                .into_iter()
                .find(|e| e.name == "S3")
                .unwrap()
                .monoid,
        )
        .unwrap();
        let model = Nerve::new(g, Shape::Invertible, 3, None).unwrap();
        let d = model.diagram();
        assert!(d.cross_check(&model).passed());
        assert!(d.audit().passed());
    }

    #[test]
    fn groupoid_nerve_vertices() {
        let g = FinGroupoid::indiscrete(2);
        let d = inerve_groupoid(&g, 2);
        assert_eq!(d.level_sizes(), vec![2, 4, 8]);
        for x in 0..d.level_size(2) {
            let v = d.vertices(2, x).unwrap();
            let f = d.flip(2).unwrap()[x];
            let mut rev = d.vertices(2, f).unwrap();
            rev.reverse();
            assert_eq!(v, rev);
        }
        assert!(d.audit().passed());
    }

    #[test]
    fn monoids_have_no_invertible_nerve() {
        let bool_mul = FinMonoid::new(vec![vec![0, 0], vec![0, 1]], 1).unwrap();
        assert!(matches!(
            Nerve::new(bool_mul, Shape::Invertible, 2, None),
            Err(Error::Precondition(_))
        ));
    }
}
