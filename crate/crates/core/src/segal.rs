//! Segal-type comparison maps and the strict (bijection) conditions.
//!
//! Each comparison sends an `n`-simplex to the tuple of its distinguished
//! edges: `α_k` (`0 ↦ k, 1 ↦ k+1`) for the Segal map, `γ^k`
//! (`0 ↦ 0, 1 ↦ k+1`) for the Bousfield map, and the same edges read in
//! IΔ for `ξ_n`. The Γ variants use the projections `p_{n,i}` and the maps
//! `j^k`. A condition holds strictly at level `n` when the comparison is a
//! bijection onto its target.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::GammaDiagram;
use crate::index::{GammaMorphism, InvMonotoneMap, MonotoneMap, PointedMap};
use crate::presheaf::{fiber_power, Shape, TruncatedDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionKind {
    Segal,
    Bousfield,
    Xi,
    GammaSegal,
    BousfieldGamma,
}

impl std::fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConditionKind::Segal => "segal",
            ConditionKind::Bousfield => "bousfield",
            ConditionKind::Xi => "xi",
            ConditionKind::GammaSegal => "gamma_segal",
            ConditionKind::BousfieldGamma => "bousfield_gamma",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub level: usize,
    pub result: Verdict,
}

/// Why a level failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two elements with the same edge tuple.
    Collision {
        level: usize,
        first: usize,
        second: usize,
        first_label: String,
        second_label: String,
        image: Vec<usize>,
    },
    /// An edge tuple that no element maps to.
    Unhit {
        level: usize,
        tuple: Vec<usize>,
        labels: Vec<String>,
    },
    /// Level 0 has more than one element where a single point is required.
    NotReduced { level: usize, size: usize },
}

impl Witness {
    pub fn level(&self) -> usize {
        match self {
            Witness::Collision { level, .. }
            | Witness::Unhit { level, .. }
            | Witness::NotReduced { level, .. } => *level,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: ConditionKind,
    /// Highest level checked.
    pub level: usize,
    pub verdict: Vec<LevelVerdict>,
    /// The first failure, by level.
    pub witness: Option<Witness>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.verdict.iter().all(|v| v.result == Verdict::Pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub n_max: usize,
    /// Also require level 0 to be a single point.
    pub require_reduced: bool,
}

impl CheckOptions {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            require_reduced: false,
        }
    }

    pub fn reduced(n_max: usize) -> Self {
        Self {
            n_max,
            require_reduced: true,
        }
    }
}

/// The `n` distinguished edges `[1] -> [n]` of a comparison.
pub fn edges(kind: ConditionKind, n: usize) -> Vec<InvMonotoneMap> {
    match kind {
        ConditionKind::Segal => (0..n).map(|k| MonotoneMap::alpha(n, k).into()).collect(),
        ConditionKind::Xi => (0..n).map(|k| InvMonotoneMap::beta(n, k)).collect(),
        ConditionKind::Bousfield => (0..n).map(|k| MonotoneMap::gamma(n, k).into()).collect(),
        ConditionKind::GammaSegal | ConditionKind::BousfieldGamma => {
            panic!("{kind} has no simplicial edges")
        }
    }
}

/// The `n` maps `n -> 1` of a Γ comparison, in pointed form.
pub fn gamma_projections(kind: ConditionKind, n: usize) -> Vec<PointedMap> {
    match kind {
        ConditionKind::GammaSegal => (1..=n).map(|i| PointedMap::projection(n, i)).collect(),
        ConditionKind::BousfieldGamma => (0..n).map(|k| GammaMorphism::j(n, k).to_pointed()).collect(),
        _ => panic!("{kind} is not a Γ condition"),
    }
}

fn edge_tuples(x: &TruncatedDiagram, kind: ConditionKind, n: usize) -> Result<Vec<Vec<usize>>> {
    if n > x.rank() {
        return Err(Error::RankExceeded {
            needed: n,
            truncation: x.rank(),
        });
    }
    let tables = edges(kind, n)
        .iter()
        .map(|e| x.action_table(e))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..x.level_size(n))
        .map(|s| tables.iter().map(|t| t[s]).collect())
        .collect())
}

/// `φ_n`: each `n`-simplex to its `α`-edge tuple in the fiber power.
pub fn segal_map(x: &TruncatedDiagram, n: usize) -> Result<Vec<Vec<usize>>> {
    edge_tuples(x, ConditionKind::Segal, n)
}

/// `ψ_n`: each `n`-simplex to its `γ`-edge tuple.
pub fn bousfield_segal_map(x: &TruncatedDiagram, n: usize) -> Result<Vec<Vec<usize>>> {
    edge_tuples(x, ConditionKind::Bousfield, n)
}

/// `ξ_n`: each `n`-simplex of an IΔ^op diagram to its `β`-edge tuple.
pub fn xi_map(x: &TruncatedDiagram, n: usize) -> Result<Vec<Vec<usize>>> {
    require_invertible(x)?;
    edge_tuples(x, ConditionKind::Xi, n)
}

fn require_invertible(x: &TruncatedDiagram) -> Result<()> {
    if x.shape() != Shape::Invertible {
        return Err(Error::ShapeMismatch("ξ needs a diagram over IΔ^op".into()));
    }
    Ok(())
}

/// Edge tuples that all start at one vertex: the target of `ψ_n`.
fn star_power(x: &TruncatedDiagram, n: usize) -> Vec<Vec<usize>> {
    let start = x.face(1, 1);
    let mut out = Vec::new();
    for v in 0..x.level_size(0) {
        let from_v: Vec<usize> = (0..x.level_size(1)).filter(|&e| start[e] == v).collect();
        let mut tuples = vec![Vec::new()];
        for _ in 0..n {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    from_v.iter().map(move |&e| {
                        let mut t = t.clone();
                        t.push(e);
                        t
                    })
                })
                .collect();
        }
        out.extend(tuples);
    }
    out.sort();
    out
}

/// Decide whether `map` (element -> tuple) is a bijection onto `targets`.
fn bijection_witness(
    level: usize,
    map: &[Vec<usize>],
    targets: &[Vec<usize>],
    element_label: impl Fn(usize) -> String,
    edge_label: impl Fn(usize) -> String,
) -> Option<Witness> {
    let mut seen: HashMap<&[usize], usize> = HashMap::with_capacity(map.len());
    for (s, t) in map.iter().enumerate() {
        if let Some(&first) = seen.get(t.as_slice()) {
            return Some(Witness::Collision {
                level,
                first,
                second: s,
                first_label: element_label(first),
                second_label: element_label(s),
                image: t.clone(),
            });
        }
        seen.insert(t, s);
    }
    targets
        .iter()
        .find(|t| !seen.contains_key(t.as_slice()))
        .map(|t| Witness::Unhit {
            level,
            tuple: t.clone(),
            labels: t.iter().map(|&e| edge_label(e)).collect(),
        })
}

fn assemble(
    condition: ConditionKind,
    opts: CheckOptions,
    level0: Option<Witness>,
    levels: Vec<(usize, Option<Witness>)>,
) -> ConditionReport {
    let mut verdict = vec![LevelVerdict {
        level: 0,
        result: if level0.is_some() { Verdict::Fail } else { Verdict::Pass },
    }];
    let mut witness = level0;
    for (n, w) in levels {
        verdict.push(LevelVerdict {
            level: n,
            result: if w.is_some() { Verdict::Fail } else { Verdict::Pass },
        });
        if witness.is_none() {
            witness = w;
        }
    }
    ConditionReport {
        condition,
        level: opts.n_max,
        verdict,
        witness,
    }
}

fn check_simplicial(x: &TruncatedDiagram, kind: ConditionKind, opts: CheckOptions) -> Result<ConditionReport> {
    let needed = opts.n_max.max(1);
    if needed > x.rank() {
        return Err(Error::RankExceeded {
            needed,
            truncation: x.rank(),
        });
    }
    // levels are finite sets, so level 0 is always discrete
    let level0 = (opts.require_reduced && x.level_size(0) != 1).then(|| Witness::NotReduced {
        level: 0,
        size: x.level_size(0),
    });
    let levels = (2..=opts.n_max)
        .into_par_iter()
        .map(|n| -> Result<(usize, Option<Witness>)> {
            let map = edge_tuples(x, kind, n)?;
            let targets = match kind {
                ConditionKind::Bousfield => star_power(x, n),
                _ => fiber_power(x, n)?,
            };
            let w = bijection_witness(
                n,
                &map,
                &targets,
                |s| x.label(n, s).to_string(),
                |e| x.label(1, e).to_string(),
            );
            Ok((n, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(kind, opts, level0, levels))
}

/// Strict Segal condition for `2 <= n <= n_max`.
pub fn strict_segal_check(x: &TruncatedDiagram, n_max: usize) -> Result<ConditionReport> {
    strict_segal_check_with(x, CheckOptions::new(n_max))
}

pub fn strict_segal_check_with(x: &TruncatedDiagram, opts: CheckOptions) -> Result<ConditionReport> {
    check_simplicial(x, ConditionKind::Segal, opts)
}

/// Strict Bousfield-Segal condition for `2 <= n <= n_max`.
pub fn strict_bousfield_check(x: &TruncatedDiagram, n_max: usize) -> Result<ConditionReport> {
    strict_bousfield_check_with(x, CheckOptions::new(n_max))
}

pub fn strict_bousfield_check_with(x: &TruncatedDiagram, opts: CheckOptions) -> Result<ConditionReport> {
    check_simplicial(x, ConditionKind::Bousfield, opts)
}

/// Strict `ξ` condition for `2 <= n <= n_max` on an IΔ^op diagram.
pub fn strict_xi_check(x: &TruncatedDiagram, n_max: usize) -> Result<ConditionReport> {
    strict_xi_check_with(x, CheckOptions::new(n_max))
}

pub fn strict_xi_check_with(x: &TruncatedDiagram, opts: CheckOptions) -> Result<ConditionReport> {
    require_invertible(x)?;
    check_simplicial(x, ConditionKind::Xi, opts)
}

/// Each element of `X(n)` to its tuple of images under the comparison maps.
pub fn gamma_map(x: &GammaDiagram, kind: ConditionKind, n: usize) -> Result<Vec<Vec<usize>>> {
    let tables = gamma_projections(kind, n)
        .iter()
        .map(|p| x.action(p).map(<[usize]>::to_vec))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..x.level_size(n))
        .map(|s| tables.iter().map(|t| t[s]).collect())
        .collect())
}

fn check_gamma(x: &GammaDiagram, kind: ConditionKind, n_max: usize) -> Result<ConditionReport> {
    let needed = n_max.max(1);
    if needed > x.rank() {
        return Err(Error::RankExceeded {
            needed,
            truncation: x.rank(),
        });
    }
    let opts = CheckOptions::reduced(n_max);
    let level0 = (!x.is_strict_at_zero()).then(|| Witness::NotReduced {
        level: 0,
        size: x.level_size(0),
    });
    let ones = x.level_size(1);
    let levels = (2..=n_max)
        .into_par_iter()
        .map(|n| -> Result<(usize, Option<Witness>)> {
            let map = gamma_map(x, kind, n)?;
            let mut targets = vec![Vec::new()];
            for _ in 0..n {
                targets = targets
                    .into_iter()
                    .flat_map(|t: Vec<usize>| {
                        (0..ones).map(move |e| {
                            let mut t = t.clone();
                            t.push(e);
                            t
                        })
                    })
                    .collect();
            }
            let w = bijection_witness(
                n,
                &map,
                &targets,
                |s| x.label(n, s).to_string(),
                |e| x.label(1, e).to_string(),
            );
            Ok((n, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(kind, opts, level0, levels))
}

/// Strict Segal condition for a Γ-diagram: `(p_{n,1}, …, p_{n,n})` is a
/// bijection `X(n) -> X(1)^n`. A non-singleton `X(0)` fails level 0.
pub fn gamma_segal_check(x: &GammaDiagram, n_max: usize) -> Result<ConditionReport> {
    check_gamma(x, ConditionKind::GammaSegal, n_max)
}

/// Strict Bousfield condition for a Γ-diagram: `(j^0, …, j^{n-1})` is a
/// bijection `X(n) -> X(1)^n`.
pub fn bousfield_gamma_check(x: &GammaDiagram, n_max: usize) -> Result<ConditionReport> {
    check_gamma(x, ConditionKind::BousfieldGamma, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinMonoid;
    use crate::nerve::nerve;
    use crate::presheaf::{reduce, representable, terminal};

    #[test]
    fn bousfield_on_z2_and_bool() {
        assert!(strict_bousfield_check(&nerve(&FinMonoid::cyclic(2), 2), 2).unwrap().passed());
        let bool_mul = FinMonoid::new(vec![vec![0, 0], vec![0, 1]], 1).unwrap();
        let x = nerve(&bool_mul, 2);
        let r = strict_bousfield_check(&x, 2).unwrap();
        assert!(!r.passed());
        match r.witness.unwrap() {
            Witness::Collision {
                first_label,
                second_label,
                ..
            } => {
                assert_eq!(first_label, "(0|0)");
                assert_eq!(second_label, "(0|1)");
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn reduced_interval_is_not_segal() {
        let x = reduce(&representable(Shape::Simplicial, 1, 2)).unwrap();
        let r = strict_segal_check(&x, 2).unwrap();
        assert!(matches!(r.witness, Some(Witness::Unhit { .. })));
        let ix = reduce(&representable(Shape::Invertible, 1, 2)).unwrap();
        assert!(!strict_xi_check(&ix, 2).unwrap().passed());
    }

    #[test]
    fn terminal_passes_everything() {
        let t = terminal(Shape::Invertible, 4);
        assert!(strict_segal_check(&t, 4).unwrap().passed());
        assert!(strict_bousfield_check(&t, 4).unwrap().passed());
        assert!(strict_xi_check(&t, 4).unwrap().passed());
    }

    #[test]
    fn rank_and_shape_errors() {
        let x = nerve(&FinMonoid::cyclic(2), 2);
        assert!(matches!(strict_segal_check(&x, 3), Err(Error::RankExceeded { .. })));
        assert!(matches!(strict_xi_check(&x, 2), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn reducedness_is_optional() {
        let x = representable(Shape::Simplicial, 1, 2);
        let loose = strict_segal_check(&x, 2).unwrap();
        let strict = strict_segal_check_with(&x, CheckOptions::reduced(2)).unwrap();
        assert_eq!(loose.verdict[0].result, Verdict::Pass);
        assert!(matches!(strict.witness, Some(Witness::NotReduced { size: 2, .. })));
    }

    #[test]
    fn report_json_fields() {
        let r = strict_segal_check(&terminal(Shape::Simplicial, 2), 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["condition", "level", "verdict", "witness"]);
    }
}
