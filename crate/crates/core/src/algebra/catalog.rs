use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::FinMonoid;
use crate::error::{Error, Result};

/// Largest order enumerated by brute force.
pub const EXHAUSTIVE_MAX_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogKind {
    Monoids,
    AbelianMonoids,
    Groups,
    AbelianGroups,
}

impl CatalogKind {
    fn admits(self, m: &FinMonoid) -> bool {
        match self {
            CatalogKind::Monoids => true,
            CatalogKind::AbelianMonoids => m.is_commutative(),
            CatalogKind::Groups => m.is_group(),
            CatalogKind::AbelianGroups => m.is_group() && m.is_commutative(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub monoid: FinMonoid,
}

impl CatalogEntry {
    fn new(name: &str, monoid: FinMonoid) -> Self {
        Self {
            name: name.to_string(),
            monoid,
        }
    }
}

/// Smallest relabelling of the table over bijections fixing the identity,
/// which sits at element 0.
fn canonical_form(m: &FinMonoid) -> FinMonoid {
    let n = m.order();
    let mut best: Option<FinMonoid> = None;
    let mut perm: Vec<usize> = (0..n).collect();

    fn go(m: &FinMonoid, perm: &mut Vec<usize>, pos: usize, best: &mut Option<FinMonoid>) {
        if pos == perm.len() {
            let candidate = m.relabel(perm);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                *best = Some(candidate);
            }
            return;
        }
        for i in pos..perm.len() {
            perm.swap(pos, i);
            go(m, perm, pos + 1, best);
            perm.swap(pos, i);
        }
    }

    go(m, &mut perm, 1, &mut best);
    best.expect("at least the identity permutation")
}

/// Every monoid of order `n` with identity `0`, up to isomorphism, sorted by
/// canonical table.
fn monoids_of_order(n: usize) -> Vec<FinMonoid> {
    if n == 0 {
        return Vec::new();
    }
    let free = (n - 1) * (n - 1);
    let count = n.pow(free as u32);
    let found: BTreeSet<FinMonoid> = (0..count)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut table: Vec<Vec<usize>> = (0..n)
                .map(|a| (0..n).map(|b| if a == 0 { b } else if b == 0 { a } else { 0 }).collect())
                .collect();
            for a in 1..n {
                for b in 1..n {
                    table[a][b] = code % n;
                    code /= n;
                }
            }
            FinMonoid::new(table, 0).ok().map(|m| canonical_form(&m))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_iter().collect()
}

fn describe(m: &FinMonoid) -> &'static str {
    match (m.is_group(), m.is_commutative()) {
        (true, _) => "grp",
        (false, true) => "cmon",
        (false, false) => "mon",
    }
}

/// The exhaustive catalog of a kind up to `max_order`, deduplicated up to
/// isomorphism. Entries are named `{order}.{index}.{grp|cmon|mon}`, with the
/// index counting within the order over all monoids, so names are stable
/// across kinds.
pub fn catalog(kind: CatalogKind, max_order: usize) -> Result<Vec<CatalogEntry>> {
    if max_order > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::Capability(format!(
            "exhaustive catalogs stop at order {EXHAUSTIVE_MAX_ORDER}; use the curated list beyond"
        )));
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (i, m) in monoids_of_order(n).into_iter().enumerate() {
            if kind.admits(&m) {
                let name = format!("{n}.{i}.{}", describe(&m));
                out.push(CatalogEntry { name, monoid: m });
            }
        }
    }
    Ok(out)
}

/// Hand-picked structures of order up to 6: the groups `Z/4`, `Z/2×Z/2`,
/// `S3`, `Z/5`, `Z/6`, and non-groups covering the commutative and
/// non-commutative cases.
pub fn curated() -> Vec<CatalogEntry> {
    let z2 = FinMonoid::cyclic(2);
    // S3 as permutations of {0,1,2}, composed left to right
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    let s3 = FinMonoid::new(
        perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index([q[p[0]], q[p[1]], q[p[2]]]))
                    .collect()
            })
            .collect(),
        0,
    )
    .expect("S3 is a group");
    // ({0,1,2,3}, max) with identity 0
    let max4 = FinMonoid::new(
        (0..4).map(|a| (0..4).map(|b| a.max(b)).collect()).collect(),
        0,
    )
    .expect("max is a monoid");
    // identity 0 adjoined to the left-zero semigroup {1,2,3}
    let left_zero = FinMonoid::new(
        (0..4)
            .map(|a| (0..4).map(|b| if a == 0 { b } else { a }).collect())
            .collect(),
        0,
    )
    .expect("left-zero plus identity is a monoid");
    // all maps {0,1} -> {0,1}: id, swap, const0, const1; composed left to right
    let maps: [[usize; 2]; 4] = [[0, 1], [1, 0], [0, 0], [1, 1]];
    let t2 = FinMonoid::new(
        maps.iter()
            .map(|f| {
                maps.iter()
                    .map(|g| {
                        let h = [g[f[0]], g[f[1]]];
                        maps.iter().position(|m| *m == h).expect("closed")
                    })
                    .collect()
            })
            .collect(),
        0,
    )
    .expect("the full transformation monoid");
    let bool_mul = FinMonoid::new(vec![vec![0, 0], vec![0, 1]], 1).expect("({0,1}, ·)");
    vec![
        CatalogEntry::new("Z/4", FinMonoid::cyclic(4)),
        CatalogEntry::new("Z/2xZ/2", z2.product(&z2)),
        CatalogEntry::new("S3", s3),
        CatalogEntry::new("Z/5", FinMonoid::cyclic(5)),
        CatalogEntry::new("Z/6", FinMonoid::cyclic(6)),
        CatalogEntry::new("bool_mul", bool_mul),
        CatalogEntry::new("max4", max4),
        CatalogEntry::new("left_zero3+1", left_zero),
        CatalogEntry::new("T2", t2),
    ]
}

/// The exhaustive catalog of `kind` up to order 3 followed by the admitted
/// curated entries.
pub fn corpus(kind: CatalogKind) -> Vec<CatalogEntry> {
    let mut out = catalog(kind, EXHAUSTIVE_MAX_ORDER).expect("within the exhaustive range");
    out.extend(curated().into_iter().filter(|e| kind.admits(&e.monoid)));
    out
}
