use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use invsegal::algebra::{FinGroup, FinMonoid};
use invsegal::filtration::{attachment_compare, stage_chain_report, Variant};
use invsegal::gamma::{roundtrip_check, t_construct};
use invsegal::index::{category_laws, verify_generated_closure, Category, InvMonotoneMap, Morphism};
use invsegal::nerve::{inerve, inerve_free, nerve};
use invsegal::presheaf::{iso_check, reduce, representable, Shape};
use invsegal::segal::{strict_bousfield_check, strict_segal_check, strict_xi_check};
use std::hint::black_box;

fn index_categories(c: &mut Criterion) {
    let mut group = c.benchmark_group("index");
    for n in [3, 5, 7] {
        group.bench_with_input(BenchmarkId::new("idelta_hom", n), &n, |b, &n| {
            b.iter(|| InvMonotoneMap::hom(black_box(n), black_box(n)))
        });
    }
    group.sample_size(10);
    group.bench_function("laws_idelta_rank3", |b| b.iter(|| category_laws(Category::InvDelta, 3)));
    group.bench_function("laws_gamma_rank3", |b| b.iter(|| category_laws(Category::Gamma, 3)));
    group.bench_function("generated_closure_4", |b| b.iter(|| verify_generated_closure(4, 4)));
    group.finish();
}

fn nerves_and_conditions(c: &mut Criterion) {
    let z3 = FinGroup::cyclic(3);
    let z6 = FinGroup::cyclic(6);
    let mut group = c.benchmark_group("nerve");
    for (name, g) in [("Z3", &z3), ("Z6", &z6)] {
        group.bench_with_input(BenchmarkId::new("inerve_trunc4", name), g, |b, g| b.iter(|| inerve(g, 4)));
        let d = inerve(g, 4);
        group.bench_with_input(BenchmarkId::new("xi_nmax4", name), &d, |b, d| {
            b.iter(|| strict_xi_check(d, 4).unwrap())
        });
        let n = nerve(g.monoid(), 4);
        group.bench_with_input(BenchmarkId::new("segal_nmax4", name), &n, |b, n| {
            b.iter(|| strict_segal_check(n, 4).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bousfield_nmax4", name), &n, |b, n| {
            b.iter(|| strict_bousfield_check(n, 4).unwrap())
        });
    }
    group.bench_function("inerve_free_2gen_trunc3_bound3", |b| b.iter(|| inerve_free(2, 3, 3).unwrap()));
    group.finish();
}

fn gamma(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma");
    group.sample_size(20);
    for order in [2, 4, 6] {
        let a = FinMonoid::cyclic(order);
        group.bench_with_input(BenchmarkId::new("t_trunc3", order), &a, |b, a| {
            b.iter(|| t_construct(a, 3).unwrap())
        });
        let x = t_construct(&a, 3).unwrap();
        group.bench_with_input(BenchmarkId::new("roundtrip_trunc3", order), &x, |b, x| {
            b.iter(|| roundtrip_check(x))
        });
    }
    group.finish();
}

fn presheaves_and_filtrations(c: &mut Criterion) {
    let mut group = c.benchmark_group("filtration");
    group.sample_size(10);
    let r = reduce(&representable(Shape::Invertible, 1, 3)).unwrap();
    group.bench_function("iso_check_reduced_idelta1", |b| b.iter(|| iso_check(&r, &r).unwrap()));
    group.bench_function("chain_invertible_3_4", |b| {
        b.iter(|| stage_chain_report(Variant::Invertible { generators: 1 }, 4, 3, 4).unwrap())
    });
    for k in 1..=3 {
        group.bench_with_input(BenchmarkId::new("attachment_invertible_3_4", k), &k, |b, &k| {
            b.iter(|| attachment_compare(Variant::Invertible { generators: 1 }, k, 3, 4).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, index_categories, nerves_and_conditions, gamma, presheaves_and_filtrations);
criterion_main!(benches);
