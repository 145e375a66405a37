use criterion::{criterion_group, criterion_main, Criterion};

use extremal::{verify_sweep, verify_sweep_seq, SweepKind};

fn bench_sweeps(c: &mut Criterion) {
    for (kind, max_two_n) in [(SweepKind::Bar, 8), (SweepKind::Roundtrip, 8)] {
        let mut group = c.benchmark_group(format!("{kind}-sweep"));
        group.bench_function("parallel", |b| {
            b.iter(|| verify_sweep(kind, max_two_n).pass())
        });
        group.bench_function("sequential", |b| {
            b.iter(|| verify_sweep_seq(kind, max_two_n).pass())
        });
        group.finish();
    }
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
