use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sinf_core::cosets::census_with;
use sinf_core::diagram::verify_relations_with;
use sinf_core::symchar::CharacterTable;
use sinf_core::thoma::{is_totally_positive_with, mseq_from_params, ThomaParams};
use sinf_core::Exec;

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census_n4");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| census_with(4, false, exec).unwrap())
        });
    }
    g.finish();
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations_window4");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_relations_with(4, false, exec).unwrap())
        });
    }
    g.finish();
}

fn total_positivity(c: &mut Criterion) {
    let a = mseq_from_params(&ThomaParams::regular(), 12);
    let mut g = c.benchmark_group("tp_window12_order4");
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| is_totally_positive_with(&a, 12, 4, exec).unwrap())
        });
    }
    g.finish();
}

fn character_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("character_table_n9");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| CharacterTable::with_exec(9, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, census, relations, total_positivity, character_table);
criterion_main!(benches);
