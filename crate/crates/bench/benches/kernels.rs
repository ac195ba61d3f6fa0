use criterion::{criterion_group, criterion_main, Criterion};

use shiftroof_bench::{golden_matrix, golden_spec, recoded_spec};
use shiftroof_core::pressure::{partition_sum, pressure_root, q_table};
use shiftroof_core::sft::{entropy_spectral, LanguageTable};

fn bench_partition_sum(c: &mut Criterion) {
    let golden = golden_spec();
    let recoded = recoded_spec();
    c.bench_function("partition_sum_golden_n60", |b| {
        b.iter(|| partition_sum(&golden, 60, 1.0).unwrap())
    });
    c.bench_function("partition_sum_recoded_n60", |b| {
        b.iter(|| partition_sum(&recoded, 60, 1.0).unwrap())
    });
}

fn bench_q_table(c: &mut Criterion) {
    let golden = golden_spec();
    c.bench_function("q_table_golden_r200", |b| {
        b.iter(|| q_table(&golden, 200, 1.0).unwrap())
    });
}

fn bench_pressure_root(c: &mut Criterion) {
    let golden = golden_spec();
    c.bench_function("pressure_root_golden_n60", |b| {
        b.iter(|| pressure_root(&golden, 60, None, 1e-10).unwrap())
    });
}

fn bench_language_table(c: &mut Criterion) {
    let m = golden_matrix();
    c.bench_function("language_table_n300_exact", |b| {
        b.iter(|| LanguageTable::for_matrix(&m, 300, 300))
    });
}

fn bench_spectral(c: &mut Criterion) {
    let m = golden_matrix();
    c.bench_function("entropy_spectral_golden", |b| {
        b.iter(|| entropy_spectral(&m).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_partition_sum,
    bench_q_table,
    bench_pressure_root,
    bench_language_table,
    bench_spectral
);
criterion_main!(kernels);
