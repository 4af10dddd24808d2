use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dnull_sym::resultant::{resultant_with, DetMethod};
use dnull_sym::{parse, Execution, Ring};

fn bench_resultant(c: &mut Criterion) {
    let ring = Ring::new(&["H", "beta", "a"]).unwrap();
    let f = parse(
        &ring,
        "(H*beta + a - 2)^3*(beta - H) + H^4*beta^2 - a*beta + 7",
    )
    .unwrap();
    let g = parse(
        &ring,
        "(beta^2 - a*H + 1)^3 + H^3*beta^5 - 3*H*a^2*beta + beta",
    )
    .unwrap();
    let mut group = c.benchmark_group("bareiss");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{exec:?}")),
            &exec,
            |b, &exec| b.iter(|| resultant_with(&f, &g, 1, DetMethod::Bareiss, exec).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_resultant);
criterion_main!(benches);
