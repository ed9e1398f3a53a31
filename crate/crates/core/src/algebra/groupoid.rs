use serde::Serialize;

use super::{FinGroup, ValidationReport};
use crate::error::{Error, Result};

/// A finite groupoid. `compose[f][g]` is `f` followed by `g`, defined exactly
/// when `f` ends where `g` starts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinGroupoid {
    objects: usize,
    ends: Vec<(usize, usize)>,
    compose: Vec<Vec<Option<usize>>>,
    identities: Vec<usize>,
    inverse: Vec<usize>,
}

impl FinGroupoid {
    pub fn new(
        objects: usize,
        ends: Vec<(usize, usize)>,
        compose: Vec<Vec<Option<usize>>>,
        identities: Vec<usize>,
    ) -> Result<Self> {
        let report = Self::validate(objects, &ends, &compose, &identities)?;
        if let Some(v) = report.violation {
            return Err(Error::InvalidStructure(format!(
                "{} fails at {:?}",
                v.law, v.witness
            )));
        }
        let inverse = (0..ends.len())
            .map(|f| {
                let (s, t) = ends[f];
                (0..ends.len())
                    .find(|&g| {
                        compose[f][g] == Some(identities[s]) && compose[g][f] == Some(identities[t])
                    })
                    .expect("validated")
            })
            .collect();
        Ok(Self {
            objects,
            ends,
            compose,
            identities,
            inverse,
        })
    }

    /// Category laws and invertibility. Shape errors are input errors.
    pub fn validate(
        objects: usize,
        ends: &[(usize, usize)],
        compose: &[Vec<Option<usize>>],
        identities: &[usize],
    ) -> Result<ValidationReport> {
        let n = ends.len();
        let bad = |msg: String| Err(Error::InvalidStructure(msg));
        if identities.len() != objects {
            return bad(format!("{objects} objects but {} identities", identities.len()));
        }
        if ends.iter().any(|&(s, t)| s >= objects || t >= objects) {
            return bad("a morphism has an end outside the object set".into());
        }
        if compose.len() != n || compose.iter().any(|r| r.len() != n) {
            return bad(format!("the composition table must be {n}×{n}"));
        }
        if identities.iter().any(|&i| i >= n) {
            return bad("an identity is not a morphism".into());
        }
        for f in 0..n {
            for g in 0..n {
                let composable = ends[f].1 == ends[g].0;
                match compose[f][g] {
                    Some(h) if !composable => {
                        return bad(format!("{f} then {g} is not composable but has value {h}"))
                    }
                    None if composable => return bad(format!("{f} then {g} is missing")),
                    Some(h) if h >= n || ends[h] != (ends[f].0, ends[g].1) => {
                        return bad(format!("{f} then {g} has the wrong ends"))
                    }
                    _ => {}
                }
            }
        }
        let fail = |law: &str, w: Vec<usize>| Ok(ValidationReport::fail(law, w));
        for (x, &i) in identities.iter().enumerate() {
            if ends[i] != (x, x) {
                return fail("identity", vec![i]);
            }
        }
        for f in 0..n {
            let (s, t) = ends[f];
            if compose[identities[s]][f] != Some(f) || compose[f][identities[t]] != Some(f) {
                return fail("identity", vec![f]);
            }
        }
        for f in 0..n {
            for g in 0..n {
                let Some(fg) = compose[f][g] else { continue };
                for h in 0..n {
                    let Some(gh) = compose[g][h] else { continue };
                    if compose[fg][h] != compose[f][gh] {
                        return fail("associativity", vec![f, g, h]);
                    }
                }
            }
        }
        for f in 0..n {
            let (s, t) = ends[f];
            let invertible = (0..n).any(|g| {
                compose[f][g] == Some(identities[s]) && compose[g][f] == Some(identities[t])
            });
            if !invertible {
                return fail("invertibility", vec![f]);
            }
        }
        Ok(ValidationReport::pass())
    }

    /// Every object has exactly one morphism to every object.
    pub fn indiscrete(objects: usize) -> Self {
        let ends: Vec<(usize, usize)> = (0..objects)
            .flat_map(|s| (0..objects).map(move |t| (s, t)))
            .collect();
        let id = |s: usize, t: usize| s * objects + t;
        let compose = ends
            .iter()
            .map(|&(a, b)| {
                ends.iter()
                    .map(|&(c, d)| (b == c).then(|| id(a, d)))
                    .collect()
            })
            .collect();
        let identities = (0..objects).map(|x| id(x, x)).collect();
        Self::new(objects, ends, compose, identities).expect("indiscrete groupoids are valid")
    }

    /// A group as a one-object groupoid.
    pub fn from_group(g: &FinGroup) -> Self {
        let n = g.order();
        let compose = (0..n)
            .map(|a| (0..n).map(|b| Some(g.mul(a, b))).collect())
            .collect();
        Self::new(1, vec![(0, 0); n], compose, vec![g.identity()])
            .expect("groups are one-object groupoids")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.ends.len()
    }

    pub fn source(&self, f: usize) -> usize {
        self.ends[f].0
    }

    pub fn target(&self, f: usize) -> usize {
        self.ends[f].1
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.compose[f][g]
    }

    pub fn inv(&self, f: usize) -> usize {
        self.inverse[f]
    }

    pub fn morphisms_from(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.ends.len()).filter(move |&f| self.ends[f].0 == x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indiscrete_two_objects() {
        let g = FinGroupoid::indiscrete(2);
        assert_eq!(g.morphism_count(), 4);
        for f in 0..4 {
            assert_eq!(g.then(f, g.inv(f)), Some(g.identity(g.source(f))));
        }
    }

    #[test]
    fn missing_inverse_is_reported() {
        // a one-object "groupoid" whose table is the monoid ({0,1}, ·)
        let compose = vec![vec![Some(0), Some(0)], vec![Some(0), Some(1)]];
        let r = FinGroupoid::validate(1, &[(0, 0), (0, 0)], &compose, &[1]).unwrap();
        assert_eq!(r.violation.unwrap().law, "invertibility");
    }

    #[test]
    fn wrong_shapes_are_input_errors() {
        assert!(FinGroupoid::validate(1, &[(0, 1)], &[vec![None]], &[0]).is_err());
    }
}
