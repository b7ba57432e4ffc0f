use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ocrc_core::hodge::{hodge_closed_form, HodgeQuery};
use ocrc_core::potentials::{
    open_potential_orbifold, open_potential_resolution, orbifold_caps, resolution_caps,
};
use ocrc_core::suites::{suite_ocrc, RouteCaps};
use ocrc_core::vertex::g_power_coefficients;
use ocrc_core::{Caps, GaussRat, TruncSeries};

fn algebra(c: &mut Criterion) {
    let caps = Caps::analytic(16, "z");
    let s = TruncSeries::from_analytic(&caps, (1..=16).map(GaussRat::from_int));
    c.bench_function("series_inverse_z16", |b| {
        b.iter(|| black_box(&s).inverse().unwrap())
    });
    c.bench_function("series_log_z16", |b| {
        b.iter(|| black_box(&s).inverse().unwrap().log().unwrap())
    });
    c.bench_function("g_power_table_10x10", |b| {
        b.iter(|| {
            (1..=10)
                .map(|n| g_power_coefficients(n, 9))
                .collect::<Vec<_>>()
        })
    });
    c.bench_function("hodge_closed_form_g5", |b| {
        b.iter(|| hodge_closed_form(black_box(&HodgeQuery::new(5, 5, vec![2, 1, 1]))))
    });
}

fn potentials(c: &mut Criterion) {
    let mut g = c.benchmark_group("potentials");
    g.sample_size(10);
    g.bench_function("resolution_w3_b3_q4", |b| {
        let caps = resolution_caps(3, 3, 4);
        b.iter(|| open_potential_resolution(3, 3).to_series(&caps).unwrap())
    });
    g.bench_function("orbifold_w3_b3_z10", |b| {
        let caps = orbifold_caps(3, 3, 11);
        b.iter(|| open_potential_orbifold(&caps))
    });
    g.bench_function("open_crc_w2_b2_z8", |b| {
        let caps = RouteCaps {
            max_winding: 2,
            max_boundary: 2,
            max_q: 4,
            order: 9,
        };
        b.iter(|| suite_ocrc(caps, false).unwrap())
    });
    g.finish();
}

criterion_group!(benches, algebra, potentials);
criterion_main!(benches);
