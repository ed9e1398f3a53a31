//! Finite monoids, groups and groupoids given by tables, free words, and the
//! catalogs used for exhaustive sweeps.

mod catalog;
mod groupoid;
mod json;
mod word;

pub use catalog::{catalog, corpus, curated, CatalogEntry, CatalogKind, EXHAUSTIVE_MAX_ORDER};
pub use groupoid::FinGroupoid;
pub use json::{parse_structure, Structure, StructureInput};
pub use word::{FreeWord, Letter, TheoryHom};

use serde::Serialize;

use crate::error::{Error, Result};

/// The first law a table violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub violation: Option<LawViolation>,
}

impl ValidationReport {
    fn pass() -> Self {
        Self {
            passed: true,
            violation: None,
        }
    }

    fn fail(law: &str, witness: Vec<usize>) -> Self {
        Self {
            passed: false,
            violation: Some(LawViolation {
                law: law.to_string(),
                witness,
            }),
        }
    }
}

/// Check that a table is square with entries in range.
fn check_shape(table: &[Vec<usize>], identity: usize) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::InvalidStructure("a monoid has at least one element".into()));
    }
    if let Some(row) = table.iter().position(|r| r.len() != n) {
        return Err(Error::InvalidStructure(format!(
            "row {row} has {} entries, expected {n}",
            table[row].len()
        )));
    }
    if let Some(v) = table.iter().flatten().find(|&&v| v >= n) {
        return Err(Error::InvalidStructure(format!("entry {v} is not an element")));
    }
    if identity >= n {
        return Err(Error::InvalidStructure(format!("identity {identity} is not an element")));
    }
    Ok(n)
}

/// Associativity and identity laws of a multiplication table, reporting the
/// first counterexample in lexicographic order.
pub fn validate_table(table: &[Vec<usize>], identity: usize) -> Result<ValidationReport> {
    let n = check_shape(table, identity)?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Ok(ValidationReport::fail("associativity", vec![a, b, c]));
                }
            }
        }
    }
    for a in 0..n {
        if table[identity][a] != a || table[a][identity] != a {
            return Ok(ValidationReport::fail("identity", vec![a]));
        }
    }
    Ok(ValidationReport::pass())
}

/// A finite monoid; `table[a][b]` is `a·b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FinMonoid {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FinMonoid {
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let report = validate_table(&table, identity)?;
        if let Some(v) = report.violation {
            return Err(Error::InvalidStructure(format!(
                "{} fails at {:?}",
                v.law, v.witness
            )));
        }
        Ok(Self { table, identity })
    }

    pub(crate) fn new_unchecked(table: Vec<Vec<usize>>, identity: usize) -> Self {
        debug_assert!(Self::new(table.clone(), identity).is_ok());
        Self { table, identity }
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        Self::new_unchecked(
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            0,
        )
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Pairs `(a, b)` encoded as `a * |other| + b`.
    pub fn product(&self, other: &Self) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::new_unchecked(table, self.identity * m + other.identity)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Product of a sequence, left to right; the empty product is the identity.
    pub fn product_of(&self, elements: impl IntoIterator<Item = usize>) -> usize {
        elements
            .into_iter()
            .fold(self.identity, |acc, x| self.table[acc][x])
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Left and right cancellation. For finite monoids this is equivalent to
    /// being a group.
    pub fn is_cancellative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            let mut left = vec![false; n];
            let mut right = vec![false; n];
            for b in 0..n {
                left[self.table[a][b]] = true;
                right[self.table[b][a]] = true;
            }
            left.into_iter().all(|x| x) && right.into_iter().all(|x| x)
        })
    }

    /// The two-sided inverse of `a`, if any.
    pub fn inverse_of(&self, a: usize) -> Option<usize> {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity && self.table[b][a] == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.order()).all(|a| self.inverse_of(a).is_some())
    }

    /// An isomorphism `self -> other` as an element map, found by backtracking
    /// over identity-preserving bijections.
    pub fn isomorphism_to(&self, other: &Self) -> Option<Vec<usize>> {
        let n = self.order();
        if other.order() != n || self.is_commutative() != other.is_commutative() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.identity] = other.identity;
        used[other.identity] = true;
        let order: Vec<usize> = (0..n).filter(|&a| a != self.identity).collect();

        fn go(
            s: &FinMonoid,
            o: &FinMonoid,
            order: &[usize],
            pos: usize,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            // every product of assigned elements must be respected
            let assigned: Vec<usize> = (0..map.len()).filter(|&a| map[a] != usize::MAX).collect();
            for &a in &assigned {
                for &b in &assigned {
                    let ab = s.mul(a, b);
                    if map[ab] != usize::MAX && map[ab] != o.mul(map[a], map[b]) {
                        return false;
                    }
                }
            }
            let Some(&a) = order.get(pos) else {
                return true;
            };
            for y in 0..map.len() {
                if used[y] {
                    continue;
                }
                map[a] = y;
                used[y] = true;
                if go(s, o, order, pos + 1, map, used) {
                    return true;
                }
                map[a] = usize::MAX;
                used[y] = false;
            }
            false
        }

        go(self, other, &order, 0, &mut map, &mut used).then_some(map)
    }

    /// The table relabelled along a bijection `perm` (old element -> new).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.table[a][b]];
            }
        }
        Self::new_unchecked(table, perm[self.identity])
    }
}

/// A finite group: a monoid with its inverse table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinGroup {
    monoid: FinMonoid,
    inverse: Vec<usize>,
}

impl FinGroup {
    pub fn try_from_monoid(monoid: FinMonoid) -> Result<Self> {
        let inverse = (0..monoid.order())
            .map(|a| {
                monoid.inverse_of(a).ok_or_else(|| {
                    Error::Precondition(format!("element {a} has no inverse"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { monoid, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::try_from_monoid(FinMonoid::cyclic(n)).expect("cyclic monoids are groups")
    }

    pub fn monoid(&self) -> &FinMonoid {
        &self.monoid
    }

    pub fn into_monoid(self) -> FinMonoid {
        self.monoid
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    pub fn identity(&self) -> usize {
        self.monoid.identity()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z3_validates() {
        let z3 = FinMonoid::cyclic(3);
        assert!(validate_table(z3.table(), 0).unwrap().passed);
    }

    #[test]
    fn non_associative_magma_has_a_witness() {
        // a·b = 1 - a
        let magma = vec![vec![1, 1], vec![0, 0]];
        let r = validate_table(&magma, 0).unwrap();
        assert!(!r.passed);
        let w = r.violation.unwrap();
        assert_eq!(w.law, "associativity");
        let (a, b, c) = (w.witness[0], w.witness[1], w.witness[2]);
        assert_ne!(magma[magma[a][b]][c], magma[a][magma[b][c]]);
    }

    #[test]
    fn malformed_tables_are_input_errors() {
        assert!(validate_table(&[vec![0, 1]], 0).is_err());
        assert!(validate_table(&[vec![0, 2], vec![1, 0]], 0).is_err());
        assert!(validate_table(&[], 0).is_err());
    }

    #[test]
    fn cancellative_iff_group_on_small_examples() {
        let bool_mul = FinMonoid::new(vec![vec![0, 0], vec![0, 1]], 1).unwrap();
        assert!(!bool_mul.is_cancellative());
        assert!(!bool_mul.is_group());
        let z2z2 = FinMonoid::cyclic(2).product(&FinMonoid::cyclic(2));
        assert!(z2z2.is_cancellative() && z2z2.is_group() && z2z2.is_commutative());
    }

    #[test]
    fn isomorphism_search() {
        let z4 = FinMonoid::cyclic(4);
        let z2z2 = FinMonoid::cyclic(2).product(&FinMonoid::cyclic(2));
        assert!(z4.isomorphism_to(&z2z2).is_none());
        let shuffled = z4.relabel(&[0, 3, 1, 2]);
        let iso = z4.isomorphism_to(&shuffled).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(iso[z4.mul(a, b)], shuffled.mul(iso[a], iso[b]));
            }
        }
    }

    #[test]
    fn group_inverses() {
        let g = FinGroup::cyclic(5);
        for a in 0..5 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        let m = FinMonoid::new(vec![vec![0, 0], vec![0, 1]], 1).unwrap();
        assert!(FinGroup::try_from_monoid(m).is_err());
    }
}
