//! JSON input for structures.
//!
//! ```json
//! {"kind": "group", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "identity": 0}
//! ```
//!
//! `kind` is one of `monoid`, `abelian_monoid`, `group`, `abelian_group` or
//! `groupoid`. A groupoid lists its morphisms by ends and gives the
//! composition table with `null` for non-composable pairs:
//!
//! ```json
//! {"kind": "groupoid", "objects": 2,
//!  "morphisms": [{"source":0,"target":0}, {"source":0,"target":1},
//!                {"source":1,"target":0}, {"source":1,"target":1}],
//!  "compose": [[0,1,null,null],[null,null,0,1],[2,3,null,null],[null,null,2,3]],
//!  "identities": [0, 3]}
//! ```
//!
//! `compose[f][g]` is `f` followed by `g`. An optional `name` is carried
//! through to reports.

use serde::{Deserialize, Serialize};

use super::{FinGroup, FinGroupoid, FinMonoid};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEnds {
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StructureInput {
    Monoid {
        #[serde(default)]
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
        identity: usize,
    },
    AbelianMonoid {
        #[serde(default)]
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
        identity: usize,
    },
    Group {
        #[serde(default)]
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
        identity: usize,
    },
    AbelianGroup {
        #[serde(default)]
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
        identity: usize,
    },
    Groupoid {
        #[serde(default)]
        name: Option<String>,
        objects: usize,
        morphisms: Vec<MorphismEnds>,
        compose: Vec<Vec<Option<usize>>>,
        identities: Vec<usize>,
    },
}

/// A validated structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Monoid { name: String, monoid: FinMonoid },
    Group { name: String, group: FinGroup },
    Groupoid { name: String, groupoid: FinGroupoid },
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Monoid { name, .. }
            | Structure::Group { name, .. }
            | Structure::Groupoid { name, .. } => name,
        }
    }

    /// The underlying monoid, unless this is a groupoid with several objects.
    pub fn monoid(&self) -> Option<&FinMonoid> {
        match self {
            Structure::Monoid { monoid, .. } => Some(monoid),
            Structure::Group { group, .. } => Some(group.monoid()),
            Structure::Groupoid { .. } => None,
        }
    }
}

fn monoid_from(order: usize, table: Vec<Vec<usize>>, identity: usize) -> Result<FinMonoid> {
    if table.len() != order {
        return Err(Error::InvalidStructure(format!(
            "order {order} but the table has {} rows",
            table.len()
        )));
    }
    FinMonoid::new(table, identity)
}

fn require_commutative(m: &FinMonoid) -> Result<()> {
    let n = m.order();
    for a in 0..n {
        for b in 0..n {
            if m.mul(a, b) != m.mul(b, a) {
                return Err(Error::InvalidStructure(format!(
                    "declared abelian but {a}·{b} ≠ {b}·{a}"
                )));
            }
        }
    }
    Ok(())
}

impl StructureInput {
    pub fn into_structure(self) -> Result<Structure> {
        let unnamed = |name: Option<String>| name.unwrap_or_else(|| "input".to_string());
        Ok(match self {
            StructureInput::Monoid {
                name,
                order,
                table,
                identity,
            } => Structure::Monoid {
                name: unnamed(name),
                monoid: monoid_from(order, table, identity)?,
            },
            StructureInput::AbelianMonoid {
                name,
                order,
                table,
                identity,
            } => {
                let monoid = monoid_from(order, table, identity)?;
                require_commutative(&monoid)?;
                Structure::Monoid {
                    name: unnamed(name),
                    monoid,
                }
            }
            StructureInput::Group {
                name,
                order,
                table,
                identity,
            } => Structure::Group {
                name: unnamed(name),
                group: FinGroup::try_from_monoid(monoid_from(order, table, identity)?)
                    .map_err(|e| Error::InvalidStructure(e.to_string()))?,
            },
            StructureInput::AbelianGroup {
                name,
                order,
                table,
                identity,
            } => {
                let monoid = monoid_from(order, table, identity)?;
                require_commutative(&monoid)?;
                Structure::Group {
                    name: unnamed(name),
                    group: FinGroup::try_from_monoid(monoid)
                        .map_err(|e| Error::InvalidStructure(e.to_string()))?,
                }
            }
            StructureInput::Groupoid {
                name,
                objects,
                morphisms,
                compose,
                identities,
            } => Structure::Groupoid {
                name: unnamed(name),
                groupoid: FinGroupoid::new(
                    objects,
                    morphisms.into_iter().map(|m| (m.source, m.target)).collect(),
                    compose,
                    identities,
                )?,
            },
        })
    }
}

/// Parse and validate a structure document.
pub fn parse_structure(text: &str) -> Result<Structure> {
    let input: StructureInput = serde_json::from_str(text)
        .map_err(|e| Error::InvalidStructure(format!("malformed JSON: {e}")))?;
    input.into_structure()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples_parse() {
        let g = parse_structure(
            r#"{"kind":"group","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]],"identity":0}"#,
        )
        .unwrap();
        assert!(matches!(g, Structure::Group { .. }));
        let gd = parse_structure(
            r#"{"kind": "groupoid", "objects": 2,
                "morphisms": [{"source":0,"target":0}, {"source":0,"target":1},
                              {"source":1,"target":0}, {"source":1,"target":1}],
                "compose": [[0,1,null,null],[null,null,0,1],[2,3,null,null],[null,null,2,3]],
                "identities": [0, 3]}"#,
        )
        .unwrap();
        match gd {
            Structure::Groupoid { groupoid, .. } => assert_eq!(groupoid.morphism_count(), 4),
            _ => panic!("expected a groupoid"),
        }
    }

    #[test]
    fn false_claims_are_rejected() {
        // ({0,1}, ·) is not a group
        assert!(parse_structure(
            r#"{"kind":"group","order":2,"table":[[0,0],[0,1]],"identity":1}"#
        )
        .is_err());
        assert!(parse_structure(r#"{"kind":"monoid","order":3,"table":[[0]],"identity":0}"#).is_err());
        assert!(parse_structure(r#"{"kind":"ring","order":1,"table":[[0]],"identity":0}"#).is_err());
        assert!(parse_structure(r#"{"kind":"monoid","order":1,"table":[[0]],"identity":0,"x":1}"#).is_err());
    }
}
