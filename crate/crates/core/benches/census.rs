//! Sequential vs parallel census of S_n.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use interval_poset::{census, CensusOptions, Executor};

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [6, 7] {
        for (name, executor) in [
            ("sequential", Executor::Sequential),
            ("parallel", Executor::Parallel { threads: None }),
        ] {
            let options = CensusOptions {
                executor,
                check_ideals: false,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| census(n, &options))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_census);
criterion_main!(benches);
