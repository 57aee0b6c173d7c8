//! Criterion benchmarks comparing the sequential fold against the rayon
//! work-stealing fold on the identity right-hand-side summations, which are
//! the data-parallel core of the crate.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use emstats::exec::ExecMode;
use emstats::identities::{rhs_series, IdentityId};

fn bench_rhs(c: &mut Criterion) {
    let cases = [
        (IdentityId::MultivariateA, 1u32, 5usize, 3u32),
        (IdentityId::WreathNegMulti, 3, 3, 3),
        (IdentityId::WreathFlagMulti, 3, 3, 3),
        (IdentityId::BNaturalMulti, 2, 4, 3),
    ];
    let mut group = c.benchmark_group("rhs_series");
    for (id, r, n, k) in cases {
        let label = format!("{id}-r{r}-n{n}-K{k}");
        group.bench_with_input(
            BenchmarkId::new("sequential", &label),
            &(id, r, n, k),
            |b, &(id, r, n, k)| {
                b.iter(|| rhs_series(id, r, n, k, ExecMode::Sequential).unwrap())
            },
        );
        group.bench_with_input(
            BenchmarkId::new("parallel", &label),
            &(id, r, n, k),
            |b, &(id, r, n, k)| b.iter(|| rhs_series(id, r, n, k, ExecMode::Parallel).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_rhs);
criterion_main!(benches);
