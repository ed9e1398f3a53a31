use std::collections::BTreeSet;

use invsegal::index::{
    betweenness_check, delta_to_gamma, AnyMorphism, Category, DecoratedMap, GammaMorphism,
    InvMonotoneMap, MonotoneMap, Morphism, PointedMap,
};
use proptest::prelude::*;
use proptest::sample::select;

/// Every function `{0..m} -> {0..n}`, as value lists.
fn all_functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..=m {
        out = out
            .into_iter()
            .flat_map(|f: Vec<usize>| {
                (0..=n).map(move |v| {
                    let mut f = f.clone();
                    f.push(v);
                    f
                })
            })
            .collect();
    }
    out
}

fn weakly_monotone(f: &[usize]) -> bool {
    f.windows(2).all(|w| w[0] <= w[1]) || f.windows(2).all(|w| w[0] >= w[1])
}

#[test]
fn hom_counts_against_brute_force() {
    for m in 0..=4 {
        for n in 0..=4 {
            let functions = all_functions(m, n);
            let increasing = functions.iter().filter(|f| f.windows(2).all(|w| w[0] <= w[1])).count();
            let monotone = functions.iter().filter(|f| weakly_monotone(f)).count();
            let delta = MonotoneMap::hom(m, n);
            let idelta = InvMonotoneMap::hom(m, n);
            assert_eq!(delta.len(), increasing);
            assert_eq!(idelta.len(), monotone);
            assert_eq!(idelta.len(), 2 * delta.len() - (n + 1));
            assert!(idelta.iter().all(|f| betweenness_check(f.values())));
            let distinct: BTreeSet<&InvMonotoneMap> = idelta.iter().collect();
            assert_eq!(distinct.len(), idelta.len());
        }
    }
}

#[test]
fn non_fullness_witness() {
    let f = [0, 2, 1];
    assert!(betweenness_check(&f));
    assert!(InvMonotoneMap::new(2, f.to_vec()).is_err());
    assert!(!InvMonotoneMap::hom(2, 2).iter().any(|g| g.values() == f));
}

fn idelta_pair() -> impl Strategy<Value = (InvMonotoneMap, InvMonotoneMap)> {
    (0usize..=4, 0usize..=4, 0usize..=4).prop_flat_map(|(a, b, c)| {
        (select(InvMonotoneMap::hom(a, b)), select(InvMonotoneMap::hom(b, c)))
    })
}

fn delta_pair() -> impl Strategy<Value = (MonotoneMap, MonotoneMap)> {
    (0usize..=3, 0usize..=3, 0usize..=3)
        .prop_flat_map(|(a, b, c)| (select(MonotoneMap::hom(a, b)), select(MonotoneMap::hom(b, c))))
}

proptest! {
    #[test]
    fn flip_is_an_involution(n in 0usize..=6) {
        let f = InvMonotoneMap::flip(n);
        prop_assert_eq!(f.compose(&f).unwrap(), InvMonotoneMap::identity(n));
    }

    #[test]
    fn flip_after_ascending_is_descending(
        f in (0usize..=4, 1usize..=4).prop_flat_map(|(m, n)| select(MonotoneMap::hom(m, n)))
    ) {
        let g: InvMonotoneMap = f.clone().into();
        let h = InvMonotoneMap::flip(f.target()).compose(&g).unwrap();
        if g.is_constant() {
            prop_assert!(h.is_ascending());
        } else {
            prop_assert!(!h.is_ascending());
        }
    }

    #[test]
    fn idelta_composition_is_function_composition((g, f) in idelta_pair()) {
        let fg = f.compose(&g).unwrap();
        for i in 0..=g.source() {
            prop_assert_eq!(fg.apply(i), f.apply(g.apply(i)));
        }
        prop_assert!(betweenness_check(fg.values()));
    }

    #[test]
    fn decomposition_recomposes(
        f in (0usize..=4, 0usize..=4).prop_flat_map(|(m, n)| select(InvMonotoneMap::hom(m, n)))
    ) {
        let recomposed = f
            .decompose()
            .iter()
            .map(|g| g.as_map())
            .reduce(|acc, g| acc.compose(&g).unwrap())
            .unwrap_or_else(|| InvMonotoneMap::identity(f.source()));
        prop_assert_eq!(recomposed, f);
    }

    #[test]
    fn delta_to_gamma_is_a_functor((g, f) in delta_pair()) {
        let lhs = delta_to_gamma(&f.compose(&g).unwrap());
        let rhs = delta_to_gamma(&f).compose(&delta_to_gamma(&g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dictionary_reverses_composition(
        (f, g) in (0usize..=3, 0usize..=3, 0usize..=3)
            .prop_flat_map(|(a, b, c)| (select(PointedMap::hom(a, b)), select(PointedMap::hom(b, c))))
    ) {
        let gf = g.compose(&f).unwrap();
        let via_gamma = f.to_gamma().compose(&g.to_gamma()).unwrap();
        prop_assert_eq!(gf.to_gamma(), via_gamma.clone());
        prop_assert_eq!(via_gamma.to_pointed(), gf);
    }

    #[test]
    fn text_round_trips(
        f in (0usize..=3, 0usize..=3).prop_flat_map(|(m, n)| {
            let mut all = Vec::new();
            for c in [Category::Delta, Category::InvDelta, Category::Gamma, Category::GammaOp] {
                all.extend(invsegal::index::enumerate_hom(c, m, n));
            }
            select(all)
        })
    ) {
        let text = f.to_string();
        let parsed: AnyMorphism = text.parse().unwrap();
        prop_assert_eq!(parsed, f);
    }

    #[test]
    fn decorated_composition_keeps_objects(
        objects in prop::collection::vec(0usize..3, 1..=4),
        choice in any::<prop::sample::Index>(),
        inner_choice in any::<prop::sample::Index>(),
        m in 0usize..=3,
        l in 0usize..=3,
    ) {
        let n = objects.len() - 1;
        let outer = DecoratedMap::hom_into(m, &objects);
        let f = choice.get(&outer);
        let inner = DecoratedMap::hom_into(l, f.source_objects());
        let g = inner_choice.get(&inner);
        let fg = f.compose(g).unwrap();
        prop_assert_eq!(fg.target_objects(), &objects[..]);
        prop_assert_eq!(fg.source_objects(), g.source_objects());
        for (i, &o) in fg.source_objects().iter().enumerate() {
            prop_assert_eq!(o, objects[fg.underlying().apply(i)]);
        }
        prop_assert!(n == f.underlying().target());
    }
}

#[test]
fn gamma_morphisms_have_disjoint_images() {
    for m in 0..=3 {
        for n in 0..=3 {
            for f in GammaMorphism::hom(m, n) {
                let mut seen = BTreeSet::new();
                for i in 1..=m {
                    for &j in f.image(i) {
                        assert!(seen.insert(j));
                    }
                }
            }
        }
    }
}
