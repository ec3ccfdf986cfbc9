use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nsgs_core::enumerate::{semigroups_by_filter, semigroups_by_tree};
use nsgs_core::{
    diagram_of, dual, dual_sum_is_semigroup, hook_grid, is_semigroup_via_hooks, set_sum,
    verify_theorem, EnumBound, NumericalSet, SumKind, Theorem,
};

fn example() -> NumericalSet {
    "0 5 8 10 13 15 16 18 20 21 23 24 25 26 28 ->"
        .parse()
        .unwrap()
}

fn set_operations(c: &mut Criterion) {
    let s = example();
    let d = dual(&s);
    c.bench_function("is_semigroup", |b| b.iter(|| black_box(&s).is_semigroup()));
    c.bench_function("is_semigroup_via_hooks", |b| {
        b.iter(|| is_semigroup_via_hooks(black_box(&s)))
    });
    c.bench_function("hook_grid", |b| {
        b.iter(|| hook_grid(&diagram_of(black_box(&s))))
    });
    c.bench_function("dual", |b| b.iter(|| dual(black_box(&s))));
    c.bench_function("minimal_generators", |b| {
        b.iter(|| black_box(&s).minimal_generators())
    });
    let mut group = c.benchmark_group("dual_sum");
    for kind in SumKind::ALL {
        group.bench_with_input(
            BenchmarkId::new("set_sum", kind.letter()),
            &kind,
            |b, &k| b.iter(|| set_sum(&s, &d, k)),
        );
        group.bench_with_input(
            BenchmarkId::new("criterion", kind.letter()),
            &kind,
            |b, &k| b.iter(|| dual_sum_is_semigroup(&s, k)),
        );
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_genus");
    group.sample_size(10);
    for g in [8, 10, 12] {
        let bound = EnumBound::by_genus(g).unwrap();
        group.bench_with_input(BenchmarkId::new("tree", g), &bound, |b, &bound| {
            b.iter(|| semigroups_by_tree(bound))
        });
        group.bench_with_input(BenchmarkId::new("filter", g), &bound, |b, &bound| {
            b.iter(|| semigroups_by_filter(bound))
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let bound = EnumBound::by_genus(12).unwrap();
    for theorem in [Theorem::Thm416, Theorem::Cor417, Theorem::Lemma44] {
        group.bench_with_input(BenchmarkId::from_parameter(theorem), &theorem, |b, &t| {
            b.iter(|| verify_theorem(t, bound))
        });
    }
    group.finish();
}

criterion_group!(benches, set_operations, enumeration, verification);
criterion_main!(benches);
