use invsegal::algebra::{catalog, curated, CatalogKind, FinGroup, FreeWord};
use invsegal::index::{InvMonotoneMap, MonotoneMap, Morphism};
use invsegal::nerve::{inerve, inerve_groupoid, nerve, FreeGroup, Nerve, Simplex};
use invsegal::presheaf::{
    enumerate_maps, iso_check, pushout, reduce, representable, DiagramMorphism, MapSearch, Shape,
    TruncatedDiagram,
};
use invsegal::FinGroupoid;
use proptest::prelude::*;
use proptest::sample::{select, Index};

fn groups_up_to(order: usize) -> Vec<FinGroup> {
    catalog(CatalogKind::Groups, 3)
        .unwrap()
        .into_iter()
        .chain(curated())
        .filter(|e| e.monoid.is_group() && e.monoid.order() <= order)
        .map(|e| FinGroup::try_from_monoid(e.monoid).unwrap())
        .collect()
}

#[test]
fn monoid_nerves_pass_the_audit() {
    for e in catalog(CatalogKind::Monoids, 3).unwrap() {
        let d = nerve(&e.monoid, 4);
        assert!(d.audit().passed(), "{}", e.name);
    }
}

#[test]
fn invertible_nerve_restricts_to_the_nerve() {
    for g in groups_up_to(6) {
        let full = inerve(&g, 3);
        assert_eq!(full.restrict_to_ascending(), nerve(g.monoid(), 3));
    }
}

#[test]
fn flips_on_invertible_nerves() {
    for g in groups_up_to(6) {
        let d = inerve(&g, 3);
        for k in 0..=3 {
            let flip = d.flip(k).unwrap();
            assert!((0..d.level_size(k)).all(|x| flip[flip[x]] == x));
        }
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                // level 2 lists (a|b) at a*n + b
                let y = d.flip(2).unwrap()[a * n + b];
                assert_eq!(y, g.inv(b) * n + g.inv(a));
            }
        }
    }
}

#[test]
fn empty_windows_give_identities() {
    let g = FinGroup::cyclic(4);
    let d = nerve(g.monoid(), 3);
    for x in 0..d.level_size(2) {
        let (a, b) = (x / 4, x % 4);
        // s_1 (a|b) = (a|1|b), with 1 the identity 0
        let y = d.degeneracy(2, 1)[x];
        assert_eq!(y, (a * 4) * 4 + b);
    }
}

#[test]
fn groupoid_nerve_passes_the_audit() {
    let g = FinGroupoid::indiscrete(3);
    let d = inerve_groupoid(&g, 3);
    assert!(d.audit().passed());
    assert_eq!(d.level_sizes(), vec![3, 9, 27, 81]);
}

fn free_and_group() -> impl Strategy<Value = (FinGroup, Vec<usize>)> {
    select(groups_up_to(4)).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), prop::collection::vec(0..n, 2))
    })
}

proptest! {
    #[test]
    fn free_nerve_maps_naturally_to_group_nerves(
        (g, values) in free_and_group(),
        level in 0usize..=3,
        element in any::<Index>(),
        theta_pick in any::<Index>(),
        m in 0usize..=3,
    ) {
        let free = Nerve::new(FreeGroup { generators: 2, bound: 3 }, Shape::Invertible, 3, Some(3)).unwrap();
        let target = Nerve::new(g.clone(), Shape::Invertible, 3, None).unwrap();
        let evaluate = |s: &Simplex<FreeWord>| Simplex {
            start: 0,
            arrows: s.arrows.iter().map(|w| w.evaluate(&g, &values)).collect(),
        };
        let s = element.get(free.simplices(level));
        let thetas = InvMonotoneMap::hom(m, level);
        let theta = theta_pick.get(&thetas);
        let down = free.act_on_simplex(theta, s).unwrap();
        let across = target.act_on_simplex(theta, &evaluate(s)).unwrap();
        prop_assert_eq!(evaluate(&down), across);
    }
}

#[test]
fn reduce_is_idempotent() {
    for shape in [Shape::Simplicial, Shape::Invertible] {
        for n in 0..=2 {
            let once = reduce(&representable(shape, n, 3)).unwrap();
            let twice = reduce(&once).unwrap();
            assert!(iso_check(&once, &twice).unwrap().is_iso());
        }
    }
}

/// The map from the point picking vertex `i` of `target`.
fn point(source: &TruncatedDiagram, target: &TruncatedDiagram, i: usize) -> DiagramMorphism {
    DiagramMorphism::new(
        (0..=target.rank())
            .map(|k| {
                let up: InvMonotoneMap = MonotoneMap::constant(k, 0, 0).into();
                (0..source.level_size(k)).map(|_| target.act(&up, i).unwrap()).collect()
            })
            .collect(),
    )
}

/// Every cocone `(u: B -> D, v: C -> D)` with `u f = v g` factors through
/// the pushout exactly once.
#[test]
fn pushout_universal_property() {
    let a = representable(Shape::Simplicial, 0, 2);
    let b = representable(Shape::Simplicial, 1, 2);
    let c = representable(Shape::Simplicial, 1, 2);
    let f = point(&a, &b, 1);
    let g = point(&a, &c, 0);
    f.check(&a, &b).unwrap();
    g.check(&a, &c).unwrap();
    let po = pushout(&a, &b, &c, &f, &g).unwrap();
    let targets = [
        representable(Shape::Simplicial, 2, 2),
        reduce(&representable(Shape::Simplicial, 2, 2)).unwrap(),
    ];
    for d in &targets {
        let from_b = enumerate_maps(&b, d, MapSearch::default()).unwrap();
        let from_c = enumerate_maps(&c, d, MapSearch::default()).unwrap();
        let from_p = enumerate_maps(&po.diagram, d, MapSearch::default()).unwrap();
        let mut cocones = 0;
        for u in &from_b {
            for v in &from_c {
                if u.compose(&f) != v.compose(&g) {
                    continue;
                }
                cocones += 1;
                let factorizations = from_p
                    .iter()
                    .filter(|h| h.compose(&po.from_b) == *u && h.compose(&po.from_c) == *v)
                    .count();
                assert_eq!(factorizations, 1);
            }
        }
        assert!(cocones > 0);
        assert_eq!(cocones, from_p.len());
    }
}
