//! Exhaustive checks on the index categories: hom-set enumeration, category
//! laws via composition tables, and the generator-closure comparison for the
//! invertible simplicial category.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::{
    betweenness_check, delta_to_gamma, AnyMorphism, Category, GammaMorphism, IndexError,
    InvMonotoneMap, MonotoneMap, Morphism, PointedMap,
};

/// Largest rank `verify_generated_closure` accepts.
pub const DEFAULT_CLOSURE_BOUND: usize = 4;

const MAX_RECORDED_FAILURES: usize = 16;

pub fn enumerate_hom(category: Category, m: usize, n: usize) -> Vec<AnyMorphism> {
    match category {
        Category::Delta => MonotoneMap::hom(m, n).into_iter().map(AnyMorphism::Delta).collect(),
        Category::InvDelta => InvMonotoneMap::hom(m, n)
            .into_iter()
            .map(AnyMorphism::InvDelta)
            .collect(),
        Category::Gamma => GammaMorphism::hom(m, n)
            .into_iter()
            .map(AnyMorphism::Gamma)
            .collect(),
        Category::GammaOp => PointedMap::hom(m, n)
            .into_iter()
            .map(AnyMorphism::Pointed)
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Alpha,
    Beta,
    Gamma,
    P,
    J,
}

impl FamilyKind {
    fn name(self) -> &'static str {
        match self {
            FamilyKind::Alpha => "alpha",
            FamilyKind::Beta => "beta",
            FamilyKind::Gamma => "gamma",
            FamilyKind::P => "p",
            FamilyKind::J => "j",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alpha" => Ok(FamilyKind::Alpha),
            "beta" => Ok(FamilyKind::Beta),
            "gamma" => Ok(FamilyKind::Gamma),
            "p" => Ok(FamilyKind::P),
            "j" => Ok(FamilyKind::J),
            _ => Err(IndexError::Parse {
                text: s.to_string(),
                reason: "unknown family (expected alpha, beta, gamma, p or j)".into(),
            }),
        }
    }
}

/// The `n` distinguished morphisms of a family, indexed `k = 0..n`
/// (`i = 1..=n` for the pointed projections).
pub fn projection_family(kind: FamilyKind, n: usize) -> Result<Vec<AnyMorphism>, IndexError> {
    if n == 0 {
        return Err(IndexError::EmptyFamily(kind.name()));
    }
    Ok(match kind {
        FamilyKind::Alpha => (0..n)
            .map(|k| AnyMorphism::Delta(MonotoneMap::alpha(n, k)))
            .collect(),
        FamilyKind::Beta => (0..n)
            .map(|k| AnyMorphism::InvDelta(InvMonotoneMap::beta(n, k)))
            .collect(),
        FamilyKind::Gamma => (0..n)
            .map(|k| AnyMorphism::Delta(MonotoneMap::gamma(n, k)))
            .collect(),
        FamilyKind::P => (1..=n)
            .map(|i| AnyMorphism::Pointed(PointedMap::projection(n, i)))
            .collect(),
        FamilyKind::J => (0..n)
            .map(|k| AnyMorphism::Gamma(GammaMorphism::j(n, k)))
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub category: Category,
    pub rank_bound: usize,
    pub morphisms: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    /// Composable pairs checked against the pointed-map dictionary (Γ only).
    pub dictionary_pairs: usize,
    /// Composable pairs checked for functoriality of Δ → Γ (Δ only).
    pub functor_pairs: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

struct Failures {
    count: usize,
    recorded: Vec<String>,
}

impl Failures {
    fn new() -> Self {
        Self {
            count: 0,
            recorded: Vec::new(),
        }
    }

    fn push(&mut self, msg: String) {
        self.count += 1;
        if self.recorded.len() < MAX_RECORDED_FAILURES {
            self.recorded.push(msg);
        }
    }
}

const NONE: u32 = u32::MAX;

/// All morphisms between ranks `<= bound` with their composition table.
struct Table<M> {
    all: Vec<M>,
    /// `compose[f * len + g]` is the index of `f ∘ g`, or `NONE`.
    compose: Vec<u32>,
}

impl<M: Morphism> Table<M> {
    fn build(bound: usize, failures: &mut Failures) -> Self {
        let mut all = Vec::new();
        for m in 0..=bound {
            for n in 0..=bound {
                all.extend(M::hom(m, n));
            }
        }
        let index: HashMap<&M, usize> = all.iter().enumerate().map(|(i, f)| (f, i)).collect();
        if index.len() != all.len() {
            failures.push(format!("{}: hom enumeration has duplicates", M::CATEGORY));
        }
        let len = all.len();
        let rows: Vec<(Vec<u32>, Vec<String>)> = all
            .par_iter()
            .map(|f| {
                let mut row = vec![NONE; len];
                let mut errs = Vec::new();
                for (g, gm) in all.iter().enumerate() {
                    if gm.target() != f.source() {
                        continue;
                    }
                    match f.compose(gm) {
                        Ok(c) => match index.get(&c) {
                            Some(&ci) => row[g] = ci as u32,
                            None => errs.push(format!("{f} ∘ {gm} = {c} is not enumerated")),
                        },
                        Err(e) => errs.push(format!("{f} ∘ {gm}: {e}")),
                    }
                }
                (row, errs)
            })
            .collect();
        let mut compose = Vec::with_capacity(len * len);
        for (row, errs) in rows {
            compose.extend(row);
            for e in errs {
                failures.push(e);
            }
        }
        Self { all, compose }
    }

    fn get(&self, f: usize, g: usize) -> u32 {
        self.compose[f * self.all.len() + g]
    }
}

fn check_laws<M: Morphism>(bound: usize, failures: &mut Failures) -> (Table<M>, usize, usize) {
    let table = Table::<M>::build(bound, failures);
    let len = table.all.len();
    let identity_index: HashMap<usize, usize> = (0..=bound)
        .map(|r| {
            let id = M::identity(r);
            (r, table.all.iter().position(|f| *f == id).expect("identity enumerated"))
        })
        .collect();

    for (fi, f) in table.all.iter().enumerate() {
        let left = table.get(identity_index[&f.target()], fi);
        let right = table.get(fi, identity_index[&f.source()]);
        if left != fi as u32 || right != fi as u32 {
            failures.push(format!("identity law fails at {f}"));
        }
    }
    let pairs = (0..len)
        .map(|f| (0..len).filter(|&g| table.get(f, g) != NONE).count())
        .sum();

    let (triples, errs): (usize, Vec<String>) = (0..len)
        .into_par_iter()
        .map(|f| {
            let mut count = 0usize;
            let mut errs = Vec::new();
            for g in 0..len {
                let fg = table.get(f, g);
                if fg == NONE {
                    continue;
                }
                for h in 0..len {
                    let gh = table.get(g, h);
                    if gh == NONE {
                        continue;
                    }
                    count += 1;
                    if table.get(fg as usize, h) != table.get(f, gh as usize) {
                        errs.push(format!(
                            "associativity fails at ({}, {}, {})",
                            table.all[f], table.all[g], table.all[h]
                        ));
                    }
                }
            }
            (count, errs)
        })
        .reduce(
            || (0, Vec::new()),
            |(a, mut ea), (b, eb)| {
                ea.extend(eb);
                (a + b, ea)
            },
        );
    for e in errs {
        failures.push(e);
    }
    (table, pairs, triples)
}

/// Associativity and identity laws for every composable pair and triple with
/// ranks `<= rank_bound`, plus the category-specific cross-checks: Γ against
/// the pointed-map dictionary, Δ for functoriality of Δ → Γ (ranks ≤ 3), and
/// betweenness for IΔ.
pub fn category_laws(category: Category, rank_bound: usize) -> LawReport {
    let mut failures = Failures::new();
    let mut dictionary_pairs = 0;
    let mut functor_pairs = 0;
    let (morphisms, pairs_checked, triples_checked) = match category {
        Category::Delta => {
            let (t, p, tr) = check_laws::<MonotoneMap>(rank_bound, &mut failures);
            let small: Vec<&MonotoneMap> = t
                .all
                .iter()
                .filter(|f| f.source() <= 3 && f.target() <= 3)
                .collect();
            for f in &small {
                for g in &small {
                    if g.target() != f.source() {
                        continue;
                    }
                    functor_pairs += 1;
                    let lhs = delta_to_gamma(&f.compose(g).expect("composable"));
                    let rhs = delta_to_gamma(f)
                        .compose(&delta_to_gamma(g))
                        .expect("composable");
                    if lhs != rhs {
                        failures.push(format!("Δ → Γ is not functorial at ({f}, {g})"));
                    }
                }
            }
            (t.all.len(), p, tr)
        }
        Category::InvDelta => {
            let (t, p, tr) = check_laws::<InvMonotoneMap>(rank_bound, &mut failures);
            for f in &t.all {
                if !betweenness_check(f.values()) {
                    failures.push(format!("{f} violates betweenness"));
                }
            }
            (t.all.len(), p, tr)
        }
        Category::Gamma => {
            let (t, p, tr) = check_laws::<GammaMorphism>(rank_bound, &mut failures);
            for f in &t.all {
                if f.to_pointed().to_gamma() != *f {
                    failures.push(format!("dictionary round trip fails at {f}"));
                }
                for g in &t.all {
                    if g.target() != f.source() {
                        continue;
                    }
                    dictionary_pairs += 1;
                    let lhs = f.compose(g).expect("composable").to_pointed();
                    let rhs = g
                        .to_pointed()
                        .compose(&f.to_pointed())
                        .expect("composable");
                    if lhs != rhs {
                        failures.push(format!(
                            "Γ composition disagrees with pointed composition at ({f}, {g})"
                        ));
                    }
                }
            }
            (t.all.len(), p, tr)
        }
        Category::GammaOp => {
            let (t, p, tr) = check_laws::<PointedMap>(rank_bound, &mut failures);
            (t.all.len(), p, tr)
        }
    };
    LawReport {
        category,
        rank_bound,
        morphisms,
        pairs_checked,
        triples_checked,
        dictionary_pairs,
        functor_pairs,
        failure_count: failures.count,
        failures: failures.recorded,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureEntry {
    pub m: usize,
    pub n: usize,
    /// Maps `[m] -> [n]` reached by composing generators.
    pub closure: usize,
    /// Functions `[m] -> [n]` that are weakly increasing or weakly decreasing.
    pub monotone: usize,
    /// Size of the enumerated hom-set.
    pub enumerated: usize,
    /// Betweenness-preserving functions that are not monotone.
    pub betweenness_only: usize,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub m_max: usize,
    pub n_max: usize,
    pub entries: Vec<ClosureEntry>,
    /// `0 ↦ 0, 1 ↦ 2, 2 ↦ 1` preserves betweenness.
    pub witness_preserves_betweenness: bool,
    /// ... and is absent from the hom-set and from the closure.
    pub witness_absent: bool,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.agrees)
            && self.witness_preserves_betweenness
            && self.witness_absent
    }
}

type RawMap = (usize, usize, Vec<usize>);

fn all_functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    let total = (n + 1).pow(m as u32 + 1);
    (0..total)
        .map(|mut code| {
            (0..=m)
                .map(|_| {
                    let v = code % (n + 1);
                    code /= n + 1;
                    v
                })
                .collect()
        })
        .collect()
}

fn is_weakly_monotone(values: &[usize]) -> bool {
    values.windows(2).all(|w| w[0] <= w[1]) || values.windows(2).all(|w| w[0] >= w[1])
}

/// Breadth-first closure of {order-preserving maps, flips} under composition,
/// working on raw value tables so no IΔ code is trusted.
fn generated_closure(bound: usize) -> BTreeSet<RawMap> {
    let mut generators: Vec<RawMap> = Vec::new();
    for m in 0..=bound {
        for n in 0..=bound {
            for values in all_functions(m, n) {
                if values.windows(2).all(|w| w[0] <= w[1]) {
                    generators.push((m, n, values));
                }
            }
        }
        generators.push((m, m, (0..=m).rev().collect()));
    }
    let mut seen: BTreeSet<RawMap> = generators.iter().cloned().collect();
    let mut queue: VecDeque<RawMap> = generators.iter().cloned().collect();
    while let Some((m, n, values)) = queue.pop_front() {
        for (gm, gn, gv) in &generators {
            // g ∘ f
            if *gm == n {
                let composite = (m, *gn, values.iter().map(|&v| gv[v]).collect());
                if seen.insert(composite.clone()) {
                    queue.push_back(composite);
                }
            }
            // f ∘ g
            if *gn == m {
                let composite = (*gm, n, gv.iter().map(|&v| values[v]).collect());
                if seen.insert(composite.clone()) {
                    queue.push_back(composite);
                }
            }
        }
    }
    seen
}

/// Compare the generated closure with the weakly monotone maps for all
/// `m <= m_max`, `n <= n_max`.
pub fn verify_generated_closure(m_max: usize, n_max: usize) -> Result<ClosureReport, IndexError> {
    if m_max > DEFAULT_CLOSURE_BOUND || n_max > DEFAULT_CLOSURE_BOUND {
        return Err(IndexError::InvalidMorphism(format!(
            "closure bound is {DEFAULT_CLOSURE_BOUND}, got ({m_max}, {n_max})"
        )));
    }
    let closure = generated_closure(m_max.max(n_max).max(2));
    let mut entries = Vec::new();
    for m in 0..=m_max {
        for n in 0..=n_max {
            let reached: BTreeSet<&Vec<usize>> = closure
                .iter()
                .filter(|(a, b, _)| *a == m && *b == n)
                .map(|(_, _, v)| v)
                .collect();
            let functions = all_functions(m, n);
            let monotone: BTreeSet<&Vec<usize>> =
                functions.iter().filter(|v| is_weakly_monotone(v)).collect();
            let enumerated: BTreeSet<Vec<usize>> = InvMonotoneMap::hom(m, n)
                .into_iter()
                .map(|f| f.values().to_vec())
                .collect();
            let betweenness_only = functions
                .iter()
                .filter(|v| betweenness_check(v) && !is_weakly_monotone(v))
                .count();
            let agrees = reached == monotone
                && monotone.len() == enumerated.len()
                && monotone.iter().all(|v| enumerated.contains(*v));
            entries.push(ClosureEntry {
                m,
                n,
                closure: reached.len(),
                monotone: monotone.len(),
                enumerated: enumerated.len(),
                betweenness_only,
                agrees,
            });
        }
    }
    let witness = vec![0, 2, 1];
    let witness_absent = !closure.contains(&(2, 2, witness.clone()))
        && !InvMonotoneMap::hom(2, 2).iter().any(|f| f.values() == witness);
    Ok(ClosureReport {
        m_max,
        n_max,
        entries,
        witness_preserves_betweenness: betweenness_check(&witness),
        witness_absent,
    })
}
