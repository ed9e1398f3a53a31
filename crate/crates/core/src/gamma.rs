//! Γ-diagrams on pointed maps, the functor `t` from abelian monoids, and
//! the way back.
//!
//! A [`GammaDiagram`] is covariant on pointed maps `{0..m} -> {0..n}`,
//! equivalently contravariant on Γ-morphisms under the dictionary. For an
//! abelian monoid `A`, `t(A)` has `X(n) = A^n` and a pointed map `f` sends
//! `(a_1, …, a_m)` to `(b_1, …, b_n)` with `b_j` the sum of the `a_i` with
//! `f(i) = j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{FinGroup, FinMonoid};
use crate::error::{Error, Result};
use crate::index::{delta_to_gamma, InvMonotoneMap, Morphism, PointedMap};
use crate::presheaf::{AuditReport, DiagramMorphism, IsoResult, Shape, SimplicialModel, TruncatedDiagram};
use crate::segal::{bousfield_gamma_check, gamma_map, gamma_segal_check, ConditionKind};

/// A set-valued functor on pointed maps between ranks `<= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaDiagram {
    rank: usize,
    labels: Vec<Vec<String>>,
    actions: BTreeMap<PointedMap, Vec<usize>>,
}

/// Every pointed map between ranks `<= rank`.
fn all_maps(rank: usize) -> Vec<PointedMap> {
    (0..=rank)
        .flat_map(|m| (0..=rank).flat_map(move |n| PointedMap::hom(m, n)))
        .collect()
}

impl GammaDiagram {
    /// Tabulate `act(f, x)` for every pointed map `f` between ranks `<= rank`.
    pub fn from_fn(
        rank: usize,
        labels: Vec<Vec<String>>,
        act: impl Fn(&PointedMap, usize) -> usize,
    ) -> Result<Self> {
        if labels.len() != rank + 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} levels of labels for rank {rank}",
                labels.len()
            )));
        }
        let mut actions = BTreeMap::new();
        for f in all_maps(rank) {
            let table: Vec<usize> = (0..labels[f.source()].len()).map(|x| act(&f, x)).collect();
            if let Some(&y) = table.iter().find(|&&y| y >= labels[f.target()].len()) {
                return Err(Error::ShapeMismatch(format!("{f} sends an element to {y}, out of range")));
            }
            actions.insert(f, table);
        }
        Ok(Self {
            rank,
            labels,
            actions,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    /// The table of `X(f): X(m) -> X(n)`.
    pub fn action(&self, f: &PointedMap) -> Result<&[usize]> {
        let needed = f.source().max(f.target());
        self.actions
            .get(f)
            .map(Vec::as_slice)
            .ok_or(Error::RankExceeded {
                needed,
                truncation: self.rank,
            })
    }

    pub fn act(&self, f: &PointedMap, x: usize) -> Result<usize> {
        Ok(self.action(f)?[x])
    }

    /// `X(0)` is a single point.
    pub fn is_strict_at_zero(&self) -> bool {
        self.level_size(0) == 1
    }

    /// `X(g ∘ f) = X(g) X(f)` and `X(id) = id` for all composable pairs.
    pub fn audit(&self) -> AuditReport {
        let mut failures = Vec::new();
        let mut pairs = 0;
        for (f, tf) in &self.actions {
            if f == &PointedMap::identity(f.source())
                && tf.iter().enumerate().any(|(x, &y)| x != y)
            {
                failures.push(format!("{f} is not the identity"));
            }
            for (g, tg) in &self.actions {
                if g.source() != f.target() {
                    continue;
                }
                pairs += 1;
                let gf = &self.actions[&g.compose(f).expect("composable")];
                if tf.iter().enumerate().any(|(x, &y)| gf[x] != tg[y]) && failures.len() < 16 {
                    failures.push(format!("X({g} ∘ {f}) differs from X({g}) X({f})"));
                }
            }
        }
        AuditReport {
            morphisms: self.actions.len(),
            pairs_checked: pairs,
            failures,
        }
    }

    pub fn dump(&self) -> GammaDump {
        GammaDump {
            rank: self.rank,
            levels: self
                .labels
                .iter()
                .enumerate()
                .map(|(n, l)| GammaLevel {
                    level: n,
                    size: l.len(),
                    elements: l.clone(),
                })
                .collect(),
            maps: self
                .actions
                .iter()
                .map(|(f, t)| GammaAction {
                    map: f.to_string(),
                    from: f.source(),
                    to: f.target(),
                    table: t.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaDump {
    pub rank: usize,
    pub levels: Vec<GammaLevel>,
    pub maps: Vec<GammaAction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaLevel {
    pub level: usize,
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaAction {
    /// Pointed map in the `P[m->n]:…` notation.
    pub map: String,
    pub from: usize,
    pub to: usize,
    pub table: Vec<usize>,
}

/// Tuples in `A^n` indexed lexicographically, first coordinate most
/// significant.
fn encode(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &a| acc * order + a)
}

fn decode(order: usize, n: usize, mut code: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = code % order;
        code /= order;
    }
    t
}

/// `t(A)` up to rank `truncation`.
pub fn t_construct(a: &FinMonoid, truncation: usize) -> Result<GammaDiagram> {
    if !a.is_commutative() {
        return Err(Error::Precondition("t needs a commutative monoid".into()));
    }
    let order = a.order();
    let labels = (0..=truncation)
        .map(|n| {
            (0..order.pow(n as u32))
                .map(|c| {
                    let t: Vec<String> = decode(order, n, c).iter().map(usize::to_string).collect();
                    format!("({})", t.join(","))
                })
                .collect()
        })
        .collect();
    GammaDiagram::from_fn(truncation, labels, |f, x| {
        let src = decode(order, f.source(), x);
        let mut out = vec![a.identity(); f.target()];
        for (i, &ai) in src.iter().enumerate() {
            let j = f.apply(i + 1);
            if j > 0 {
                out[j - 1] = a.mul(out[j - 1], ai);
            }
        }
        encode(order, &out)
    })
}

fn strictness_refusal(report: crate::segal::ConditionReport) -> Error {
    Error::Refused {
        reason: format!("{} condition fails", report.condition),
        report: Box::new(report),
    }
}

/// Inverse of the comparison tuple map at level `n`, as a lookup table.
fn tuple_inverse(x: &GammaDiagram, kind: ConditionKind, n: usize) -> Result<BTreeMap<Vec<usize>, usize>> {
    Ok(gamma_map(x, kind, n)?
        .into_iter()
        .enumerate()
        .map(|(s, t)| (t, s))
        .collect())
}

/// Read the abelian monoid off a strict Γ-diagram: the set `X(1)`,
/// multiplication `fold ∘ (p_{2,1}, p_{2,2})^{-1}`, identity the image of
/// the point under `0 -> 1`.
pub fn extract_monoid(x: &GammaDiagram) -> Result<FinMonoid> {
    let check_rank = x.rank().min(3);
    if check_rank < 2 {
        return Err(Error::RankExceeded {
            needed: 2,
            truncation: x.rank(),
        });
    }
    let report = gamma_segal_check(x, check_rank)?;
    if !report.passed() {
        return Err(strictness_refusal(report));
    }
    let n = x.level_size(1);
    let pairs = tuple_inverse(x, ConditionKind::GammaSegal, 2)?;
    let fold = x.action(&PointedMap::fold(2))?;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| fold[pairs[&vec![a, b]]]).collect())
        .collect();
    let unit = x.act(&PointedMap::new(1, vec![0])?, 0)?;
    let monoid = FinMonoid::new(table, unit)?;
    if !monoid.is_commutative() {
        return Err(Error::InvalidStructure("extracted multiplication is not commutative".into()));
    }
    Ok(monoid)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub rank: usize,
    pub passed: bool,
    /// `iso[n][x]`: the element of `t(A)(n)` matched with `x ∈ X(n)`.
    pub iso: Vec<Vec<usize>>,
    pub failures: Vec<String>,
}

/// Compare `X` with `t(extract_monoid(X))` along the projection tuples.
pub fn roundtrip_check(x: &GammaDiagram) -> RoundtripReport {
    let mut failures = Vec::new();
    let monoid = match extract_monoid(x) {
        Ok(m) => m,
        Err(e) => {
            return RoundtripReport {
                rank: x.rank(),
                passed: false,
                iso: Vec::new(),
                failures: vec![e.to_string()],
            }
        }
    };
    let t = t_construct(&monoid, x.rank()).expect("extracted monoids are commutative");
    let order = monoid.order();
    let mut iso = Vec::new();
    for n in 0..=x.rank() {
        let component: Vec<usize> = if n == 0 {
            vec![0; x.level_size(0)]
        } else {
            gamma_map(x, ConditionKind::GammaSegal, n)
                .expect("within rank")
                .iter()
                .map(|tuple| encode(order, tuple))
                .collect()
        };
        let mut hit = vec![false; t.level_size(n)];
        for &y in &component {
            hit[y] = true;
        }
        if component.len() != t.level_size(n) || hit.iter().any(|h| !h) {
            failures.push(format!("level {n} is not in bijection with A^{n}"));
        }
        iso.push(component);
    }
    if failures.is_empty() {
        'maps: for f in all_maps(x.rank()) {
            let tx = x.action(&f).expect("within rank");
            let tt = t.action(&f).expect("within rank");
            for (e, &y) in tx.iter().enumerate() {
                if iso[f.target()][y] != tt[iso[f.source()][e]] {
                    failures.push(format!("{f} does not commute with the comparison"));
                    break 'maps;
                }
            }
        }
    }
    RoundtripReport {
        rank: x.rank(),
        passed: failures.is_empty(),
        iso,
        failures,
    }
}

/// The abelian group of a strict Bousfield Γ-diagram, inverses solved from
/// the level-2 partial sums: `-a` is the second coordinate of the element
/// whose partial sums are `(a, 0)`.
pub fn bousfield_group_extract(x: &GammaDiagram) -> Result<FinGroup> {
    let check_rank = x.rank().min(3);
    let report = bousfield_gamma_check(x, check_rank)?;
    if !report.passed() {
        return Err(strictness_refusal(report));
    }
    let monoid = extract_monoid(x)?;
    let sums = tuple_inverse(x, ConditionKind::BousfieldGamma, 2)?;
    let second = x.action(&PointedMap::projection(2, 2))?;
    let inverse: Vec<usize> = (0..monoid.order())
        .map(|a| second[sums[&vec![a, monoid.identity()]]])
        .collect();
    let group = FinGroup::try_from_monoid(monoid).map_err(|e| Error::InvalidStructure(e.to_string()))?;
    if group.inverse_table() != inverse.as_slice() {
        return Err(Error::InvalidStructure(
            "partial-sum inverses disagree with the multiplication".into(),
        ));
    }
    Ok(group)
}

struct Restriction<'a>(&'a GammaDiagram);

impl SimplicialModel for Restriction<'_> {
    fn shape(&self) -> Shape {
        Shape::Simplicial
    }

    fn level_size(&self, level: usize) -> usize {
        self.0.level_size(level)
    }

    fn label(&self, level: usize, element: usize) -> String {
        self.0.label(level, element).to_string()
    }

    fn act(&self, theta: &InvMonotoneMap, element: usize) -> Result<usize> {
        let f = theta
            .as_monotone()
            .ok_or_else(|| Error::ShapeMismatch(format!("{theta} is not in Δ")))?;
        self.0.act(&delta_to_gamma(&f).to_pointed(), element)
    }
}

/// The Δ^op diagram `k ↦ X(k)`, with `θ` acting through Segal's functor
/// Δ → Γ.
pub fn restrict_to_simplicial(x: &GammaDiagram, truncation: usize) -> Result<TruncatedDiagram> {
    if truncation > x.rank() {
        return Err(Error::RankExceeded {
            needed: truncation,
            truncation: x.rank(),
        });
    }
    TruncatedDiagram::materialize(&Restriction(x), truncation)
}

/// `restrict_to_simplicial(t(A)) ≅ nerve(A)` along the identification of
/// `(a_1, …, a_k)` with the bar word `(a_1|…|a_k)`.
pub fn restriction_matches_nerve(a: &FinMonoid, truncation: usize) -> Result<IsoResult> {
    let restricted = restrict_to_simplicial(&t_construct(a, truncation)?, truncation)?;
    let nerve = crate::nerve::nerve(a, truncation);
    if restricted.level_sizes() != nerve.level_sizes() {
        return Ok(IsoResult::NotIsomorphic {
            reason: format!(
                "level sizes {:?} and {:?}",
                restricted.level_sizes(),
                nerve.level_sizes()
            ),
        });
    }
    // both sides list tuples lexicographically
    let witness = DiagramMorphism::new(
        restricted
            .level_sizes()
            .iter()
            .map(|&s| (0..s).collect())
            .collect(),
    );
    Ok(match witness.check(&restricted, &nerve) {
        Ok(()) => IsoResult::Isomorphic { witness },
        Err(e) => IsoResult::NotIsomorphic {
            reason: e.to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max2() -> FinMonoid {
        FinMonoid::new(vec![vec![0, 1], vec![1, 1]], 0).unwrap()
    }

    #[test]
    fn projections_and_fold() {
        let z2 = FinMonoid::cyclic(2);
        let t = t_construct(&z2, 3).unwrap();
        assert_eq!(t.level_sizes(), vec![1, 2, 4, 8]);
        let x = encode(2, &[1, 0, 1]);
        assert_eq!(t.act(&PointedMap::projection(3, 3), x).unwrap(), 1);
        assert_eq!(t.act(&PointedMap::projection(3, 2), x).unwrap(), 0);
        for a in 0..2 {
            for b in 0..2 {
                let y = t.act(&PointedMap::fold(2), encode(2, &[a, b])).unwrap();
                assert_eq!(y, (a + b) % 2);
            }
        }
        assert!(t.audit().passed());
    }

    #[test]
    fn non_commutative_input_is_refused() {
        let t2 = crate::algebra::curated().into_iter().find(|e| e.name == "T2").unwrap();
        assert!(matches!(t_construct(&t2.monoid, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn extraction_recovers_z3() {
        let z3 = FinMonoid::cyclic(3);
        assert_eq!(extract_monoid(&t_construct(&z3, 3).unwrap()).unwrap(), z3);
        assert!(roundtrip_check(&t_construct(&z3, 3).unwrap()).passed);
    }

    #[test]
    fn bousfield_extraction() {
        let g = bousfield_group_extract(&t_construct(&FinMonoid::cyclic(3), 3).unwrap()).unwrap();
        assert_eq!(g.inverse_table(), &[0, 2, 1]);
        let refused = bousfield_group_extract(&t_construct(&max2(), 3).unwrap());
        match refused {
            Err(Error::Refused { report, .. }) => match report.witness.unwrap() {
                crate::segal::Witness::Collision {
                    first_label,
                    second_label,
                    ..
                } => assert_eq!((first_label.as_str(), second_label.as_str()), ("(1,0)", "(1,1)")),
                w => panic!("unexpected witness {w:?}"),
            },
            other => panic!("expected a refusal, got {other:?}"),
        }
        let trivial = bousfield_group_extract(&t_construct(&FinMonoid::trivial(), 2).unwrap()).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn alpha_restricts_to_a_projection() {
        let a = FinMonoid::cyclic(3);
        let x = t_construct(&a, 3).unwrap();
        let r = restrict_to_simplicial(&x, 3).unwrap();
        for k in 0..3 {
            let alpha: InvMonotoneMap = crate::index::MonotoneMap::alpha(3, k).into();
            let p = PointedMap::projection(3, k + 1);
            for s in 0..27 {
                assert_eq!(r.act(&alpha, s).unwrap(), x.act(&p, s).unwrap());
            }
        }
        assert!(restriction_matches_nerve(&a, 3).unwrap().is_iso());
    }

    #[test]
    fn a_non_strict_diagram_is_refused() {
        // X(n) = one point except X(0), which has two
        let labels = vec![vec!["a".into(), "b".into()], vec!["*".into()], vec!["*".into()]];
        let x = GammaDiagram::from_fn(2, labels, |f, e| if f.target() == 0 && f.source() == 0 { e } else { 0 })
            .unwrap();
        assert!(matches!(extract_monoid(&x), Err(Error::Refused { .. })));
    }
}
