//! Resolving `--input` files and `--catalog` names to structures.

use std::fs;
use std::path::Path;

use invsegal::algebra::{catalog, corpus, curated, parse_structure, CatalogEntry, CatalogKind, Structure};
use invsegal::{FinGroup, FinMonoid};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::CliError;

/// Catalogs by versioned name. An unversioned name means the current version.
const CATALOGS: &[(&str, &str)] = &[
    ("monoids3@v1", "every monoid of order <= 3, up to isomorphism"),
    ("abelian3@v1", "commutative monoids of order <= 3"),
    ("groups3@v1", "groups of order <= 3"),
    ("curated@v1", "hand-picked structures of order 4 to 6"),
    ("corpus@v1", "monoids3 followed by curated"),
    ("abelian-corpus@v1", "abelian3 followed by the commutative curated entries"),
    ("groups-corpus@v1", "groups3 followed by the curated groups"),
];

fn catalog_names() -> impl Iterator<Item = (&'static str, &'static str)> {
    CATALOGS.iter().copied()
}

#[derive(Debug, Clone)]
pub struct Input {
    pub name: String,
    pub structure: Structure,
    pub digest: InputDigest,
    /// Flags selecting exactly this input.
    pub selector: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub source: String,
    pub sha256: String,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn sha256(bytes: &[u8]) -> String {
    hex(&Sha256::digest(bytes))
}

fn versioned(name: &str) -> Result<&'static str, CliError> {
    CATALOGS
        .iter()
        .map(|(n, _)| *n)
        .find(|n| *n == name || n.split('@').next() == Some(name))
        .ok_or_else(|| {
            let known: Vec<String> = catalog_names().map(|(n, about)| format!("{n} ({about})")).collect();
            CliError::Input(format!("unknown catalog {name:?}; known: {}", known.join("; ")))
        })
}

fn entries(name: &str) -> Vec<CatalogEntry> {
    let exhaustive = |kind| catalog(kind, 3).expect("within the exhaustive range");
    match name {
        "monoids3@v1" => exhaustive(CatalogKind::Monoids),
        "abelian3@v1" => exhaustive(CatalogKind::AbelianMonoids),
        "groups3@v1" => exhaustive(CatalogKind::Groups),
        "curated@v1" => curated(),
        "corpus@v1" => corpus(CatalogKind::Monoids),
        "abelian-corpus@v1" => corpus(CatalogKind::AbelianMonoids),
        "groups-corpus@v1" => corpus(CatalogKind::Groups),
        _ => unreachable!("names come from CATALOGS"),
    }
}

fn structure_of(name: &str, monoid: FinMonoid) -> Structure {
    match FinGroup::try_from_monoid(monoid.clone()) {
        Ok(group) => Structure::Group {
            name: name.to_string(),
            group,
        },
        Err(_) => Structure::Monoid {
            name: name.to_string(),
            monoid,
        },
    }
}

/// The members of a catalog, optionally narrowed to one entry.
pub fn from_catalog(name: &str, entry: Option<&str>) -> Result<Vec<Input>, CliError> {
    let catalog = versioned(name)?;
    let inputs: Vec<Input> = entries(catalog)
        .into_iter()
        .filter(|e| entry.is_none_or(|want| e.name == want))
        .map(|e| {
            // digest of the canonical table, so reports pin the exact structure
            let canonical = serde_json::to_vec(&e.monoid).expect("tables serialize");
            Input {
                digest: InputDigest {
                    name: e.name.clone(),
                    source: format!("catalog:{catalog}"),
                    sha256: sha256(&canonical),
                },
                selector: format!("--catalog {catalog} --entry '{}'", e.name),
                structure: structure_of(&e.name, e.monoid),
                name: e.name,
            }
        })
        .collect();
    if inputs.is_empty() {
        return Err(CliError::Input(format!(
            "catalog {catalog} has no entry {:?}",
            entry.unwrap_or_default()
        )));
    }
    Ok(inputs)
}

pub fn from_file(path: &Path) -> Result<Input, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
    let structure = parse_structure(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    // a declared monoid that happens to be a group is treated as one
    let structure = match structure {
        Structure::Monoid { name, monoid } => structure_of(&name, monoid),
        other => other,
    };
    let name = structure.name().to_string();
    Ok(Input {
        digest: InputDigest {
            name: name.clone(),
            source: format!("file:{}", path.display()),
            sha256: sha256(&bytes),
        },
        selector: format!("--input '{}'", path.display()),
        structure,
        name,
    })
}

/// Inputs named by `--input` or `--catalog`; exactly one must be given.
pub fn resolve(input: Option<&Path>, catalog: Option<&str>, entry: Option<&str>) -> Result<Vec<Input>, CliError> {
    match (input, catalog) {
        (Some(path), None) => {
            if entry.is_some() {
                return Err(CliError::Input("--entry only applies to --catalog".into()));
            }
            Ok(vec![from_file(path)?])
        }
        (None, Some(name)) => from_catalog(name, entry),
        (Some(_), Some(_)) => Err(CliError::Input("give --input or --catalog, not both".into())),
        (None, None) => Err(CliError::Input("one of --input or --catalog is required".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unversioned_names_resolve_to_the_current_version() {
        assert_eq!(versioned("monoids3").unwrap(), "monoids3@v1");
        assert_eq!(versioned("abelian3@v1").unwrap(), "abelian3@v1");
        assert!(versioned("monoids4").is_err());
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(from_catalog("monoids3", None).unwrap().len(), 10);
        assert_eq!(from_catalog("abelian3", None).unwrap().len(), 8);
        assert_eq!(from_catalog("groups3", None).unwrap().len(), 3);
        let z3 = from_catalog("groups3", Some("3.6.grp"));
        assert!(z3.is_ok_and(|v| v.len() == 1));
    }

    #[test]
    fn digests_are_stable() {
        let a = from_catalog("monoids3", None).unwrap();
        let b = from_catalog("monoids3", None).unwrap();
        let digests = |v: &[Input]| v.iter().map(|i| i.digest.clone()).collect::<Vec<_>>();
        assert_eq!(digests(&a), digests(&b));
        assert_eq!(sha256(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
