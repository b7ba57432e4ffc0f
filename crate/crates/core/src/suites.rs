//! Named verification suites shared by the command line and the acceptance target.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rat::{int, Rat};
use crate::algebra::series::{Caps, ConstantPolicy, TruncSeries};
use crate::algebra::{DegreeVar, GaussRat, Monomial, Side, VarId};
use crate::crc::{verify_closed_crc, verify_open_crc, ClosedCaps};
use crate::error::Result;
use crate::hodge::{
    compositions, hodge_closed_form, hodge_recursion_oracle, hodge_recursion_with, HodgeQuery,
    OracleBase,
};
use crate::potentials::{
    open_potential_orbifold, open_potential_resolution, orbifold_caps, orbifold_graph_sum,
    resolution_caps, resolution_graph_sum, resummed_top_coefficient,
};
use crate::report::Report;
use crate::vertex::{
    disk_orbifold, disk_smooth, edge_cover, edge_cover_localization, g_lemma_coefficient,
    g_power_coefficients, glue_factor_smooth, orb_edge_cover, orb_glue_factor, EdgeGeom,
    OrbDiskKind, VertexSide, G_POWER_TABLE,
};

/// Seed for every randomized suite unless overridden.
pub const DEFAULT_SEED: u64 = 0x5EED_2013;

/// Recursion against closed form for `g ≤ max_genus`, `i ≤ max_i`, every ordered `m`.
pub fn suite_tphi(max_genus: u64, max_i: u64, verbose: bool) -> Report {
    let mut r = Report::new(verbose);
    let (mut n, mut bad) = (0usize, 0usize);
    let mut n_base = 0usize;
    for g in 0..=max_genus {
        for i in 1..=max_i {
            for l in 0..=(2 * g + 2) as usize {
                for m in compositions(i - 1, l) {
                    let q = HodgeQuery::new(g, i, m);
                    let (a, b) = (hodge_closed_form(&q), hodge_recursion_oracle(&q));
                    n += 1;
                    if a != b {
                        bad += 1;
                        r.push(
                            "tphi.oracle",
                            format!("g={g} i={i} m={:?}", q.mbar.0),
                            &b,
                            &a,
                            false,
                        );
                    } else if verbose {
                        r.push(
                            "tphi.oracle",
                            format!("g={g} i={i} m={:?}", q.mbar.0),
                            &b,
                            &a,
                            true,
                        );
                    }
                    if q.mbar.0.windows(2).all(|w| w[0] >= w[1]) {
                        n_base += 1;
                        let c = hodge_recursion_with(&q, OracleBase::GenusSeriesOnly);
                        if c != a {
                            bad += 1;
                            r.push(
                                "tphi.genus_series_base",
                                format!("g={g} i={i} m={:?}", q.mbar.0),
                                &c,
                                &a,
                                false,
                            );
                        }
                    }
                }
            }
        }
    }
    r.push(
        "tphi.oracle",
        "*",
        format!("{n} queries, {n_base} also from the genus-series base"),
        format!("{bad} mismatches"),
        bad == 0,
    );
    r
}

pub fn suite_gpowers() -> Report {
    let mut r = Report::new(false);
    let mut ok = true;
    for (row, want) in G_POWER_TABLE.iter().enumerate() {
        let n = row as u32 + 1;
        let got = g_power_coefficients(n, 9);
        for (k, (g, w)) in got.iter().zip(want).enumerate() {
            let pass = *g == int(*w);
            ok &= pass;
            r.push("gpowers", format!("G^{n} x^{k}"), g, w, pass);
        }
    }
    r.push(
        "gpowers",
        "*",
        "100 entries",
        if ok { "all equal" } else { "mismatch" },
        ok,
    );
    r
}

pub fn suite_glemma(max_sum: u32) -> Report {
    let mut r = Report::new(false);
    for s in 1..=max_sum {
        for d in 0..=s {
            let k = s - d;
            let want = g_power_coefficients(2 * (d + k), k as usize)[k as usize].clone();
            let got = g_lemma_coefficient(d, k).expect("d + k > 0");
            r.check_eq("glemma", format!("d={d} k={k}"), &got, &want);
            if d == 0 {
                r.check_eq("glemma.d0", format!("k={k}"), &got, &int(2));
            }
        }
    }
    r
}

/// Rational weights `(a, b)` with `a ≠ 0` and nonvanishing localization weights for every
/// `d ≤ max_d`, `k ≤ max_k`.
pub fn gluing_samples(seed: u64, count: usize, max_d: u32, max_k: u32) -> Vec<(Rat, Rat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = Rat::new(
            rng.gen_range(1..=9i64).into(),
            rng.gen_range(1..=7i64).into(),
        ) * int(if rng.gen_bool(0.5) { 1 } else { -1 });
        let b = Rat::new(
            rng.gen_range(-20..=20i64).into(),
            rng.gen_range(1..=7i64).into(),
        );
        let fine = (1..=max_d).all(|d| {
            (1..=max_k).all(|k| {
                EdgeGeom::new(a.clone(), b.clone(), k)
                    .and_then(|g| edge_cover_localization(&g, d))
                    .is_ok()
            })
        });
        if fine {
            out.push((a, b));
        }
    }
    out
}

pub fn suite_gluing(
    max_d: u32,
    max_k: u32,
    samples: usize,
    seed: u64,
    verbose: bool,
) -> Result<Report> {
    let mut r = Report::new(verbose);
    let pairs = gluing_samples(seed, samples, max_d, max_k);
    let (mut n, mut bad) = (0usize, 0usize);
    for (a, b) in &pairs {
        for k in 1..=max_k {
            for d in 1..=max_d {
                for (left, right) in [(false, false), (false, true), (true, false), (true, true)] {
                    let g = EdgeGeom::new(a.clone(), b.clone(), k)?.with_orientation(left, right);
                    let lhs = disk_smooth(&g, VertexSide::Left, d)?
                        * glue_factor_smooth(d, k, g.same_orientation())
                        * disk_smooth(&g, VertexSide::Right, d)?;
                    let cover = edge_cover(&g, d)?;
                    let oracle = edge_cover_localization(&g, d)?;
                    n += 1;
                    let what = format!("a={a} b={b} k={k} d={d} flips=({left},{right})");
                    if lhs != cover || cover != oracle || verbose {
                        bad += usize::from(lhs != cover || cover != oracle);
                        r.push(
                            "gluing",
                            what,
                            &lhs,
                            format!("{cover} / {oracle}"),
                            lhs == cover && cover == oracle,
                        );
                    }
                }
            }
        }
    }
    r.push(
        "gluing",
        "*",
        format!("{n} products"),
        format!("{bad} mismatches"),
        bad == 0,
    );
    if max_d >= 2 {
        let g = EdgeGeom::new(int(1), int(3), 1)?;
        r.check_eq(
            "gluing.anchor",
            "localization a=1 b=3 k=1 d=2",
            &edge_cover_localization(&g, 2)?,
            &edge_cover(&g, 2)?,
        );
        let lhs = disk_smooth(&g, VertexSide::Left, 2)?
            * glue_factor_smooth(2, 1, true)
            * disk_smooth(&g, VertexSide::Right, 2)?;
        let want = Rat::new(25.into(), 8.into());
        r.check_eq("gluing.anchor", "a=1 b=3 k=1 d=2", &lhs, &want);
        r.check_eq(
            "gluing.anchor",
            "edge_cover a=1 b=3 k=1 d=2",
            &edge_cover(&g, 2)?,
            &want,
        );
    }
    for d in 1..=max_d {
        let g = EdgeGeom::new(int(2), int(-3), 2)?;
        let flipped = g.clone().with_orientation(true, false);
        let ratio =
            disk_smooth(&flipped, VertexSide::Left, d)? / disk_smooth(&g, VertexSide::Left, d)?;
        r.check_eq(
            "gluing.orientation_flip",
            format!("d={d}"),
            &ratio,
            &crate::algebra::rat::sign(d as i64 + 1),
        );
    }
    Ok(r)
}

pub fn suite_orb_gluing(max_d: u32) -> Result<Report> {
    let mut r = Report::new(false);
    for d in 1..=max_d {
        for kind in OrbDiskKind::BOTH {
            let disk = disk_orbifold(d, kind)?;
            let lhs = &disk * &disk * crate::algebra::rat::sign(d as i64) * orb_glue_factor(d);
            r.check_eq(
                "orb_gluing",
                format!("d={d} {kind:?}"),
                &lhs,
                &orb_edge_cover(d, kind)?,
            );
        }
    }
    r.check_eq(
        "orb_gluing.anchor",
        "d=1 Twisted",
        &orb_edge_cover(1, OrbDiskKind::Twisted)?,
        &Rat::new(1.into(), 8.into()),
    );
    r.check_eq(
        "orb_gluing.anchor",
        "d=1 Untwisted",
        &orb_edge_cover(1, OrbDiskKind::Untwisted)?,
        &Rat::new(1.into(), 2.into()),
    );
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteCaps {
    pub max_winding: u32,
    pub max_boundary: u32,
    pub max_q: u32,
    /// Exclusive bound on `z`.
    pub order: u32,
}

pub fn suite_routes_resolution(c: RouteCaps, verbose: bool) -> Result<Report> {
    let mut r = Report::new(verbose);
    let caps = resolution_caps(c.max_winding, c.max_boundary, c.max_q);
    let resummed = open_potential_resolution(c.max_winding, c.max_boundary).to_series(&caps)?;
    let graph = resolution_graph_sum(&caps)?;
    r.compare_series("routes.resolution", &resummed, &graph, |_| true);
    let top_caps = resolution_caps(3, 1, 6);
    let top = open_potential_resolution(3, 1).to_series(&top_caps)?;
    for d in 1..=3u32 {
        for k in 0..=6u32 {
            let m = Monomial::from_pairs([
                (VarId::winding(Side::Top, d), 1),
                (VarId::Degree(DegreeVar::Q), k),
            ]);
            r.check_eq(
                "routes.resummation",
                m.display("x"),
                &top.coeff(&m).re,
                &resummed_top_coefficient(d, k),
            );
        }
    }
    Ok(r)
}

pub fn suite_routes_orbifold(c: RouteCaps, verbose: bool) -> Report {
    let mut r = Report::new(verbose);
    let caps = orbifold_caps(c.max_winding, c.max_boundary, c.order);
    let closed = open_potential_orbifold(&caps);
    let graph = orbifold_graph_sum(&caps);
    r.compare_series("routes.orbifold", &closed, &graph, |_| true);
    r
}

pub fn suite_routes(c: RouteCaps, verbose: bool) -> Result<Report> {
    let mut r = suite_routes_resolution(c, verbose)?;
    r.extend(suite_routes_orbifold(c, verbose));
    Ok(r)
}

pub fn suite_ocrc(c: RouteCaps, verbose: bool) -> Result<Report> {
    verify_open_crc(c.max_winding, c.max_boundary, c.order, verbose)
}

pub fn suite_ccrc(c: ClosedCaps, verbose: bool) -> Result<Report> {
    verify_closed_crc(c, verbose)
}

fn random_gauss(rng: &mut ChaCha8Rng) -> GaussRat {
    let part = |rng: &mut ChaCha8Rng| {
        Rat::new(
            rng.gen_range(-6..=6i64).into(),
            rng.gen_range(1..=5i64).into(),
        )
    };
    let re = part(rng);
    let im = if rng.gen_bool(0.5) {
        part(rng)
    } else {
        Rat::zero()
    };
    GaussRat::new(re, im)
}

/// Random series with the given constant term.
pub fn random_series(rng: &mut ChaCha8Rng, caps: &Caps, constant: Option<GaussRat>) -> TruncSeries {
    let mut s = TruncSeries::zero(caps);
    let vars = [
        VarId::winding(Side::Top, 1),
        VarId::winding(Side::Bottom, 2),
        VarId::Degree(DegreeVar::Q),
    ];
    for _ in 0..rng.gen_range(2..8) {
        let mut pairs = vec![(VarId::Analytic, rng.gen_range(0..caps.order))];
        for v in vars {
            if rng.gen_bool(0.3) {
                pairs.push((v, 1));
            }
        }
        let m = Monomial::from_pairs(pairs.into_iter().filter(|&(_, e)| e > 0));
        if !m.is_one() {
            s.add_term(m, random_gauss(rng));
        }
    }
    if let Some(c) = constant {
        s.add_term(Monomial::one(), c);
    }
    s
}

/// Round trips on `count` seeded random series.
pub fn suite_series(seed: u64, count: usize) -> Result<Report> {
    let mut r = Report::new(false);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let caps = Caps::analytic(7, "z")
        .with_winding(2, 2)
        .with_degree(DegreeVar::Q, 2);
    let one = TruncSeries::one(&caps);
    let names = [
        "inverse",
        "exp_log",
        "log_exp",
        "derive_antiderive",
        "antiderive_derive",
        "ring_laws",
        "scalar_ring_laws",
    ];
    let mut fails = vec![Vec::new(); names.len()];
    for k in 0..count {
        let mut unit = random_gauss(&mut rng);
        while unit.is_zero() {
            unit = random_gauss(&mut rng);
        }
        let s = random_series(&mut rng, &caps, Some(unit));
        if &s * &s.inverse()? != one || &s.inverse()? * &s != one {
            fails[0].push(k);
        }
        let u = random_series(&mut rng, &caps, Some(GaussRat::one()));
        if u.log()?.exp()? != u {
            fails[1].push(k);
        }
        let z = random_series(&mut rng, &caps, None);
        if z.exp()?.log()? != z {
            fails[2].push(k);
        }
        let top = caps.order - 1;
        if z.antiderivative(ConstantPolicy::ValueAtZero(0))
            .derivative()
            != z.filter(|m| m.analytic() < top)
        {
            fails[3].push(k);
        }
        if z.derivative()
            .antiderivative(ConstantPolicy::ValueAtZero(0))
            != z.filter(|m| m.analytic() > 0)
        {
            fails[4].push(k);
        }
        let (a, b, c) = (&s, &u, &z);
        let laws = a * b == b * a
            && &(a * b) * c == a * &(b * c)
            && a * &(b + c) == &(a * b) + &(a * c)
            && &(&(b - c) + c) == b;
        if !laws {
            fails[5].push(k);
        }
        let (x, y, w) = (
            random_gauss(&mut rng),
            random_gauss(&mut rng),
            random_gauss(&mut rng),
        );
        let scalar = &x * &y == &y * &x
            && &(&x * &y) * &w == &x * &(&y * &w)
            && &x * &(&y + &w) == &(&x * &y) + &(&x * &w)
            && (x.is_zero() || &x * &x.inv()? == GaussRat::one())
            && GaussRat::real(x.re.clone()).re == x.re;
        if !scalar {
            fails[6].push(k);
        }
    }
    for (name, f) in names.iter().zip(&fails) {
        r.push(
            format!("series.{name}"),
            "*",
            format!("{} of {count} samples pass", count - f.len()),
            format!("failing samples {f:?}"),
            f.is_empty(),
        );
    }
    let _ = Rat::one();
    Ok(r)
}

/// Every suite at one set of caps.
#[derive(Clone, Debug)]
pub struct AllConfig {
    pub max_genus: u64,
    pub routes: RouteCaps,
    pub closed: ClosedCaps,
    pub max_d: u32,
    pub max_k: u32,
    pub seed: u64,
    pub verbose: bool,
}

impl Default for AllConfig {
    fn default() -> Self {
        AllConfig {
            max_genus: 5,
            routes: RouteCaps {
                max_winding: 4,
                max_boundary: 4,
                max_q: 6,
                order: 13,
            },
            closed: ClosedCaps::default(),
            max_d: 5,
            max_k: 4,
            seed: DEFAULT_SEED,
            verbose: false,
        }
    }
}

pub fn suite_all(c: &AllConfig) -> Result<Report> {
    let mut r = Report::new(c.verbose);
    r.extend(suite_gpowers());
    r.extend(suite_tphi(c.max_genus, 5, c.verbose));
    r.extend(suite_glemma(10));
    r.extend(suite_routes(c.routes, c.verbose)?);
    r.extend(suite_gluing(c.max_d, c.max_k, 10, c.seed, c.verbose)?);
    r.extend(suite_orb_gluing(8)?);
    r.extend(suite_ocrc(c.routes, c.verbose)?);
    r.extend(suite_ccrc(c.closed, c.verbose)?);
    r.extend(suite_series(c.seed, 200)?);
    Ok(r)
}
