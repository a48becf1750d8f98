use std::hint::black_box;

use chromatic_core::hitset::{complementary_hitting_sets_with, scaling_family};
use chromatic_core::verify::{check_equivalence, CorpusSpec, Reduction, RunConfig};
use chromatic_core::Exec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn hitting_sets(c: &mut Criterion) {
    let mut group = c.benchmark_group("hitting_sets");
    group.sample_size(10);
    for k in [10u32, 12] {
        let (a, b) = scaling_family(k, 2_000);
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, k), &k, |bench, &k| {
                bench
                    .iter(|| complementary_hitting_sets_with(exec, black_box(&a), black_box(&b), k))
            });
        }
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    let spec = CorpusSpec::seeded(1);
    for r in [Reduction::C6Retract, Reduction::FallTuring] {
        for (name, exec) in STRATEGIES {
            group.bench_function(BenchmarkId::new(name, r.id()), |bench| {
                bench.iter(|| check_equivalence(r, &spec, &RunConfig::with_exec(exec)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, hitting_sets, sweeps);
criterion_main!(benches);
