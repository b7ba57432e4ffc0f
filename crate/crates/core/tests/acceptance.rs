//! The ten acceptance criteria at their stated caps. One line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use ocrc_core::crc::ClosedCaps;
use ocrc_core::report::Report;
use ocrc_core::suites::{
    suite_ccrc, suite_glemma, suite_gluing, suite_gpowers, suite_ocrc, suite_orb_gluing,
    suite_routes_orbifold, suite_routes_resolution, suite_series, suite_tphi, RouteCaps,
    DEFAULT_SEED,
};
use ocrc_core::Result;

type Criterion = (&'static str, fn() -> Result<Report>);

const ROUTES: RouteCaps = RouteCaps {
    max_winding: 4,
    max_boundary: 4,
    max_q: 6,
    order: 13,
};

fn criteria() -> Vec<Criterion> {
    vec![
        ("1 G-power table, 100 entries", || Ok(suite_gpowers())),
        ("2 Hodge recursion = closed form, g<=5, i<=5", || {
            Ok(suite_tphi(5, 5, false))
        }),
        ("3 G-lemma coefficients, d+k<=10", || Ok(suite_glemma(10))),
        ("4 resolution routes, winding/boundary<=4, Q<=6", || {
            suite_routes_resolution(ROUTES, false)
        }),
        ("5 orbifold routes, winding/n<=4, z^12", || {
            Ok(suite_routes_orbifold(ROUTES, false))
        }),
        ("6 smooth gluing sweep, d<=5, k<=4, 10 samples", || {
            suite_gluing(5, 4, 10, DEFAULT_SEED, false)
        }),
        ("7 orbifold gluing sweep, d<=8", suite_orb_gluing8),
        ("8 open CRC, winding/boundary<=4, z^12", || {
            suite_ocrc(ROUTES, false)
        }),
        ("9 closed CRC, trees<=4 edges, labels<=3, Z^8", || {
            suite_ccrc(
                ClosedCaps {
                    max_edges: 4,
                    max_label: 3,
                    z_order: 8,
                    max_w: 4,
                    max_p: 6,
                },
                false,
            )
        }),
        ("10 series round trips, 200 random series", || {
            suite_series(DEFAULT_SEED, 200)
        }),
    ]
}

fn suite_orb_gluing8() -> Result<Report> {
    suite_orb_gluing(8)
}

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (name, run) in criteria() {
        if !filter.is_empty() && !filter.iter().any(|f| name.starts_with(&format!("{f} "))) {
            continue;
        }
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(r) if r.passed() => {
                println!("PASS criterion {name} ({} rows, {secs:.1}s)", r.rows.len())
            }
            Ok(r) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.1}s)");
                for row in r.failures().take(10) {
                    println!(
                        "    {} {} lhs={} rhs={}",
                        row.check, row.monomial, row.lhs, row.rhs
                    );
                }
            }
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
