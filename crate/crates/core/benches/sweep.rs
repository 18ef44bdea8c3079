use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cubegroup::enumerate::{sweep_with, SweepOptions};
use cubegroup::Execution;

fn sweep_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for rank in [4usize, 5] {
        for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let opts = SweepOptions {
                execution,
                ..SweepOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(name, rank), &rank, |b, &rank| {
                b.iter(|| sweep_with(rank, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweep_modes);
criterion_main!(benches);
