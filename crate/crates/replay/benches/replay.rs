use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dnull_replay::{eliminate_beta, replay_many, ReplayConfig};
use dnull_sym::Execution;

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("eliminate_beta");
    group.sample_size(10);
    for n in [4u32, 6] {
        for (label, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            let cfg = ReplayConfig::new(n).with_execution(exec);
            group.bench_with_input(BenchmarkId::new(label, n), &cfg, |b, cfg| {
                b.iter(|| eliminate_beta(cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("replay_batch");
    group.sample_size(10);
    let cfgs: Vec<_> = (4..=7)
        .map(|n| ReplayConfig::new(n).with_execution(Execution::Sequential))
        .collect();
    group.bench_function("four_to_seven", |b| b.iter(|| replay_many(&cfgs)));
    group.finish();
}

criterion_group!(benches, elimination, batch);
criterion_main!(benches);
