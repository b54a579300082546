//! Oracle enumeration benchmarks: the rayon data-parallel path against the
//! always-available sequential fallback on the same workloads.
//!
//! `cargo bench -p refacto-core` runs both; building with
//! `--no-default-features` leaves only the sequential path in the library,
//! so the parallel side of the comparison is gated on the feature.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use refacto_core::oracle::{count_by_fixdim_sequential, FactorQuery, Transitivity};
use refacto_core::wreath::GroupSpec;

fn fixdim_workloads() -> Vec<(&'static str, FactorQuery)> {
    vec![
        (
            // |G| = 192, k = 3: 36864 classified tuples
            "g224-k3",
            FactorQuery::new(GroupSpec::g_ddn(2, 4), 3),
        ),
        (
            // |G| = 384, k = 2, with the transitivity filter active
            "g214-k2-transitive",
            FactorQuery::new(GroupSpec::g_d1n(2, 4), 2)
                .with_transitivity(Transitivity::TransitiveOnly),
        ),
    ]
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle-fixdim");
    group.sample_size(20);
    for (name, query) in fixdim_workloads() {
        #[cfg(feature = "parallel")]
        group.bench_function(format!("parallel/{name}"), |b| {
            b.iter(|| refacto_core::oracle::count_by_fixdim(black_box(&query)).unwrap())
        });
        group.bench_function(format!("sequential/{name}"), |b| {
            b.iter(|| count_by_fixdim_sequential(black_box(&query)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_oracle);
criterion_main!(benches);
