use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use brouwer_core::bounds::{theorem5_interval, theorem7_interval};
use brouwer_core::{eigenvalues_sym, laplacian, random_gnm};

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [7, 30, 60] {
        let m = n * (n - 1) / 4;
        let l = laplacian(&random_gnm(n, m, 42).unwrap());
        group.bench_with_input(BenchmarkId::from_parameter(n), &l, |b, l| {
            b.iter(|| eigenvalues_sym(black_box(l)).unwrap())
        });
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    c.bench_function("tables/n100", |b| {
        b.iter(|| {
            for m in (100..=700).step_by(100) {
                black_box(theorem5_interval(100, m).unwrap());
            }
            for m in (1500..=2100).step_by(100) {
                black_box(theorem7_interval(100, m).unwrap());
            }
        })
    });
}

criterion_group!(benches, jacobi, tables);
criterion_main!(benches);
