use invsegal::algebra::{corpus, CatalogKind, FinMonoid};
use invsegal::gamma::{
    bousfield_group_extract, extract_monoid, restriction_matches_nerve, roundtrip_check, t_construct,
};
use invsegal::Error;

fn truncation_for(m: &FinMonoid) -> usize {
    if m.order() <= 4 {
        3
    } else {
        2
    }
}

#[test]
fn t_is_a_strict_gamma_diagram_across_the_corpus() {
    for e in corpus(CatalogKind::AbelianMonoids) {
        let n = truncation_for(&e.monoid);
        let x = t_construct(&e.monoid, n).unwrap();
        assert!(x.is_strict_at_zero(), "{}", e.name);
        assert!(x.audit().passed(), "{}", e.name);
        let sizes: Vec<usize> = (0..=n as u32).map(|k| e.monoid.order().pow(k)).collect();
        assert_eq!(x.level_sizes(), sizes, "{}", e.name);
    }
}

#[test]
fn extraction_inverts_t() {
    for e in corpus(CatalogKind::AbelianMonoids) {
        let x = t_construct(&e.monoid, truncation_for(&e.monoid)).unwrap();
        let back = extract_monoid(&x).unwrap();
        assert!(back.isomorphism_to(&e.monoid).is_some(), "{}", e.name);
        let report = roundtrip_check(&x);
        assert!(report.passed, "{}: {:?}", e.name, report.failures);
    }
}

#[test]
fn group_extraction_exactly_on_groups() {
    for e in corpus(CatalogKind::AbelianMonoids) {
        let x = t_construct(&e.monoid, truncation_for(&e.monoid)).unwrap();
        match bousfield_group_extract(&x) {
            Ok(g) => {
                assert!(e.monoid.is_group(), "{}", e.name);
                assert!(g.monoid().isomorphism_to(&e.monoid).is_some(), "{}", e.name);
            }
            Err(err) => {
                assert!(!e.monoid.is_group(), "{}", e.name);
                assert!(matches!(err, Error::Refused { .. }), "{}", e.name);
            }
        }
    }
}

#[test]
fn restriction_recovers_the_nerve() {
    for e in corpus(CatalogKind::AbelianMonoids) {
        let iso = restriction_matches_nerve(&e.monoid, truncation_for(&e.monoid)).unwrap();
        assert!(iso.is_iso(), "{}", e.name);
    }
}

#[test]
fn non_commutative_monoids_are_rejected() {
    for e in corpus(CatalogKind::Monoids).into_iter().filter(|e| !e.monoid.is_commutative()) {
        assert!(matches!(t_construct(&e.monoid, 2), Err(Error::Precondition(_))), "{}", e.name);
    }
}
