use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dnull_geometry::stiefel::{minimize_tau, minimize_tau_sequential, StiefelConfig};
use nalgebra::DMatrix;

fn operator(n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |i, j| {
        ((i + 1) * (j + 1)) as f64 % 7.0 - 3.0 + if i == j { i as f64 } else { 0.0 }
    })
}

fn restarts(c: &mut Criterion) {
    let mut group = c.benchmark_group("stiefel_restarts");
    let cfg = StiefelConfig {
        restarts: 32,
        seed: 1,
        ..Default::default()
    };
    for n in [4usize, 8] {
        let a = operator(n);
        group.bench_with_input(BenchmarkId::new("sequential", n), &a, |b, a| {
            b.iter(|| minimize_tau_sequential(a, 3, &cfg))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &a, |b, a| {
            b.iter(|| minimize_tau(a, 3, &cfg))
        });
    }
    group.finish();
}

criterion_group!(benches, restarts);
criterion_main!(benches);
