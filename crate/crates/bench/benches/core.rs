use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use prolate_core::curves::sweep;
use prolate_core::genfun::eigen_vector;
use prolate_core::operators::{pascal_apply, structure_checks};
use prolate_core::ExactVector;

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    for p in [101u64, 1009, 10007] {
        group.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| b.iter(|| sweep(black_box(p)).unwrap()));
    }
    group.finish();
}

fn bench_eigenvector(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigen_vector");
    for n in [10usize, 40, 100] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| eigen_vector(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_pascal_apply(c: &mut Criterion) {
    let mut group = c.benchmark_group("pascal_apply");
    for n in [20usize, 100] {
        let v = ExactVector::from_ints(&(0..=n as i64).map(|k| k % 7 - 3).collect::<Vec<_>>());
        group.bench_with_input(BenchmarkId::from_parameter(n), &v, |b, v| {
            b.iter(|| pascal_apply(n, black_box(v)).unwrap())
        });
    }
    group.finish();
}

fn bench_structure(c: &mut Criterion) {
    c.bench_function("structure_checks/20", |b| b.iter(|| structure_checks(black_box(20)).unwrap()));
}

criterion_group!(benches, bench_sweep, bench_eigenvector, bench_pascal_apply, bench_structure);
criterion_main!(benches);
