//! The Segal-type checkers against a brute-force oracle that only reads face
//! tables and the Γ action.

use std::collections::HashSet;

use invsegal::algebra::{catalog, CatalogKind, FinGroup};
use invsegal::gamma::t_construct;
use invsegal::index::{Morphism, PointedMap};
use invsegal::nerve::{inerve, inerve_groupoid, nerve};
use invsegal::presheaf::{reduce, representable, terminal, Shape, TruncatedDiagram};
use invsegal::segal::{
    bousfield_gamma_check, bousfield_segal_map, gamma_segal_check, segal_map, strict_bousfield_check,
    strict_segal_check, strict_xi_check, xi_map, Verdict, Witness,
};
use invsegal::{FinGroupoid, GammaDiagram};

/// The edge of an `n`-simplex spanned by vertices `a < b`, by deleting every
/// other vertex from the top down.
fn edge_by_faces(x: &TruncatedDiagram, n: usize, s: usize, a: usize, b: usize) -> usize {
    let mut level = n;
    let mut element = s;
    for v in (0..=n).rev() {
        if v != a && v != b {
            // vertices above v are gone, so v still sits at position v
            element = x.face(level, v)[element];
            level -= 1;
        }
    }
    element
}

fn all_tuples(size: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..size).map(move |e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    out
}

fn is_bijection(map: &[Vec<usize>], targets: &[Vec<usize>]) -> bool {
    let image: HashSet<&Vec<usize>> = map.iter().collect();
    image.len() == map.len() && map.len() == targets.len() && targets.iter().all(|t| image.contains(t))
}

/// Level verdicts of the consecutive-edge (`bousfield = false`) or
/// common-source (`bousfield = true`) comparison for `2 <= n <= n_max`.
fn oracle(x: &TruncatedDiagram, n_max: usize, bousfield: bool) -> Vec<bool> {
    let start = |e: usize| edge_by_faces(x, 1, e, 0, 0);
    let end = |e: usize| edge_by_faces(x, 1, e, 1, 1);
    (2..=n_max)
        .map(|n| {
            let map: Vec<Vec<usize>> = (0..x.level_size(n))
                .map(|s| {
                    (0..n)
                        .map(|k| if bousfield { edge_by_faces(x, n, s, 0, k + 1) } else { edge_by_faces(x, n, s, k, k + 1) })
                        .collect()
                })
                .collect();
            let targets: Vec<Vec<usize>> = all_tuples(x.level_size(1), n)
                .into_iter()
                .filter(|t| {
                    if bousfield {
                        t.iter().all(|&e| start(e) == start(t[0]))
                    } else {
                        t.windows(2).all(|w| end(w[0]) == start(w[1]))
                    }
                })
                .collect();
            is_bijection(&map, &targets)
        })
        .collect()
}

fn gamma_oracle(x: &GammaDiagram, n_max: usize, bousfield: bool) -> Vec<bool> {
    (2..=n_max)
        .map(|n| {
            let maps: Vec<PointedMap> = (0..n)
                .map(|k| {
                    PointedMap::hom(n, 1)
                        .into_iter()
                        .find(|f| {
                            (0..=n).all(|i| {
                                let hit = if bousfield { 1 <= i && i <= k + 1 } else { i == k + 1 };
                                f.apply(i) == usize::from(hit)
                            })
                        })
                        .unwrap()
                })
                .collect();
            let map: Vec<Vec<usize>> = (0..x.level_size(n))
                .map(|s| maps.iter().map(|f| x.act(f, s).unwrap()).collect())
                .collect();
            is_bijection(&map, &all_tuples(x.level_size(1), n))
        })
        .collect()
}

fn verdicts(report: &invsegal::ConditionReport) -> Vec<bool> {
    report.verdict.iter().filter(|v| v.level >= 2).map(|v| v.result == Verdict::Pass).collect()
}

fn simplicial_corpus() -> Vec<(String, TruncatedDiagram)> {
    let mut out: Vec<(String, TruncatedDiagram)> = catalog(CatalogKind::Monoids, 3)
        .unwrap()
        .into_iter()
        .map(|e| (e.name.clone(), nerve(&e.monoid, 4)))
        .collect();
    for shape in [Shape::Simplicial, Shape::Invertible] {
        out.push((format!("terminal {shape:?}"), terminal(shape, 4)));
        for n in 0..=2 {
            let r = representable(shape, n, 4);
            out.push((format!("reduced {shape:?}[{n}]"), reduce(&r).unwrap()));
            out.push((format!("{shape:?}[{n}]"), r));
        }
    }
    out
}

#[test]
fn segal_and_bousfield_agree_with_the_oracle() {
    for (name, x) in simplicial_corpus() {
        let segal = strict_segal_check(&x, 4).unwrap();
        let bousfield = strict_bousfield_check(&x, 4).unwrap();
        assert_eq!(verdicts(&segal), oracle(&x, 4, false), "{name}");
        assert_eq!(verdicts(&bousfield), oracle(&x, 4, true), "{name}");
        for n in 2..=4 {
            let by_faces: Vec<Vec<usize>> = (0..x.level_size(n))
                .map(|s| (0..n).map(|k| edge_by_faces(&x, n, s, k, k + 1)).collect())
                .collect();
            assert_eq!(segal_map(&x, n).unwrap(), by_faces, "{name}");
            let by_faces: Vec<Vec<usize>> = (0..x.level_size(n))
                .map(|s| (0..n).map(|k| edge_by_faces(&x, n, s, 0, k + 1)).collect())
                .collect();
            assert_eq!(bousfield_segal_map(&x, n).unwrap(), by_faces, "{name}");
        }
    }
}

#[test]
fn xi_agrees_with_the_oracle() {
    let mut corpus: Vec<TruncatedDiagram> = catalog(CatalogKind::Groups, 3)
        .unwrap()
        .into_iter()
        .map(|e| inerve(&FinGroup::try_from_monoid(e.monoid).unwrap(), 4))
        .collect();
    corpus.push(inerve_groupoid(&FinGroupoid::indiscrete(2), 4));
    corpus.push(reduce(&representable(Shape::Invertible, 1, 4)).unwrap());
    corpus.push(representable(Shape::Invertible, 2, 4));
    for x in corpus {
        let report = strict_xi_check(&x, 4).unwrap();
        assert_eq!(verdicts(&report), oracle(&x, 4, false));
        assert_eq!(xi_map(&x, 3).unwrap(), segal_map(&x, 3).unwrap());
    }
}

#[test]
fn witnesses_are_genuine() {
    for (name, x) in simplicial_corpus() {
        for (report, map_of) in [
            (strict_segal_check(&x, 4).unwrap(), segal_map as fn(&TruncatedDiagram, usize) -> _),
            (strict_bousfield_check(&x, 4).unwrap(), bousfield_segal_map),
        ] {
            match report.witness {
                None => assert!(report.passed(), "{name}"),
                Some(Witness::Collision { level, first, second, ref image, .. }) => {
                    let map = map_of(&x, level).unwrap();
                    assert_ne!(first, second);
                    assert_eq!(&map[first], image, "{name}");
                    assert_eq!(&map[second], image, "{name}");
                }
                Some(Witness::Unhit { level, ref tuple, .. }) => {
                    let map = map_of(&x, level).unwrap();
                    assert!(!map.contains(tuple), "{name}");
                }
                Some(Witness::NotReduced { .. }) => panic!("reducedness was not requested"),
            }
        }
    }
}

#[test]
fn gamma_checks_agree_with_the_oracle() {
    for e in catalog(CatalogKind::Monoids, 3).unwrap().into_iter().filter(|e| e.monoid.is_commutative()) {
        let x = t_construct(&e.monoid, 3).unwrap();
        let segal = gamma_segal_check(&x, 3).unwrap();
        let bousfield = bousfield_gamma_check(&x, 3).unwrap();
        assert_eq!(verdicts(&segal), gamma_oracle(&x, 3, false), "{}", e.name);
        assert_eq!(verdicts(&bousfield), gamma_oracle(&x, 3, true), "{}", e.name);
        assert!(segal.passed(), "{}", e.name);
        assert_eq!(bousfield.passed(), e.monoid.is_group(), "{}", e.name);
    }
}
