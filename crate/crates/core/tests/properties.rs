use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ocrc_core::algebra::rat::{binomial, double_factorial_ratio, int, rat};
use ocrc_core::algebra::special::log_sec_half;
use ocrc_core::hodge::{
    closed_orbifold_H, hodge_closed_form, hodge_recursion_oracle, jumbo_specialize,
    log_sec_power_coeff, HodgeQuery,
};
use ocrc_core::suites::random_series;
use ocrc_core::vertex::{
    disk_smooth, edge_cover, edge_cover_localization, f_specialized, g_power_coefficients,
    g_series, glue_factor_smooth, EdgeGeom, VertexSide,
};
use ocrc_core::{Caps, ConstantPolicy, DegreeVar, GaussRat, Rat, TruncSeries, VarId};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (small_rat(), small_rat()).prop_map(|(a, b)| GaussRat::new(a, b))
}

fn caps() -> Caps {
    Caps::analytic(6, "z")
        .with_winding(2, 2)
        .with_degree(DegreeVar::Q, 2)
}

proptest! {
    #[test]
    fn rat_ring_laws(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rat::zero());
    }

    #[test]
    fn gauss_field_laws(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussRat::one());
        }
        prop_assert_eq!((&a * &a.conj()).im, Rat::zero());
    }

    #[test]
    fn series_inverse(seed in any::<u64>(), c in gauss()) {
        prop_assume!(!c.is_zero());
        let caps = caps();
        let s = random_series(&mut ChaCha8Rng::seed_from_u64(seed), &caps, Some(c));
        prop_assert_eq!(&s * &s.inverse().unwrap(), TruncSeries::one(&caps));
    }

    #[test]
    fn series_exp_log(seed in any::<u64>()) {
        let caps = caps();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_series(&mut rng, &caps, Some(GaussRat::one()));
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
        let z = random_series(&mut rng, &caps, None);
        prop_assert_eq!(z.exp().unwrap().log().unwrap(), z);
    }

    #[test]
    fn series_derivative_antiderivative(seed in any::<u64>()) {
        let caps = caps();
        let z = random_series(&mut ChaCha8Rng::seed_from_u64(seed), &caps, None)
            .filter(|m| m.analytic() > 0 && m.analytic() + 1 < 6);
        prop_assert_eq!(z.derivative().antiderivative(ConstantPolicy::ValueAtZero(0)), z.clone());
        prop_assert_eq!(z.antiderivative(ConstantPolicy::ValueAtZero(0)).derivative(), z);
    }

    #[test]
    fn series_json_round_trip(seed in any::<u64>()) {
        let caps = caps();
        let s = random_series(&mut ChaCha8Rng::seed_from_u64(seed), &caps, Some(GaussRat::from_int(2)));
        prop_assert_eq!(TruncSeries::from_json(&caps, &s.to_json()).unwrap(), s);
    }

    #[test]
    fn hodge_permutation_symmetry(g in 0u64..4, m in prop::collection::vec(0u64..3, 0..6), rot in 0usize..6) {
        let i = m.iter().sum::<u64>() + 1;
        let mut p = m.clone();
        if !p.is_empty() {
            let r = rot % p.len();
            p.rotate_left(r);
            p.reverse();
        }
        let a = HodgeQuery::new(g, i, m);
        let b = HodgeQuery::new(g, i, p);
        prop_assert_eq!(hodge_closed_form(&a), hodge_closed_form(&b));
        prop_assert_eq!(hodge_recursion_oracle(&a), hodge_recursion_oracle(&b));
    }

    #[test]
    fn jumbo_depends_on_total(parts in prop::collection::vec(1u64..4, 1..5)) {
        let d: u64 = parts.iter().sum();
        prop_assert_eq!(jumbo_specialize(&parts, 10).unwrap(), jumbo_specialize(&[d], 10).unwrap());
    }

    #[test]
    fn smooth_gluing(a in small_rat(), b in small_rat(), k in 1u32..5, d in 1u32..6, l: bool, r: bool) {
        prop_assume!(!a.is_zero());
        let g = EdgeGeom::new(a, b, k).unwrap().with_orientation(l, r);
        let lhs = disk_smooth(&g, VertexSide::Left, d).unwrap()
            * glue_factor_smooth(d, k, g.same_orientation())
            * disk_smooth(&g, VertexSide::Right, d).unwrap();
        let cover = edge_cover(&g, d).unwrap();
        prop_assert_eq!(&lhs, &cover);
        if let Ok(oracle) = edge_cover_localization(&g, d) {
            prop_assert_eq!(oracle, cover);
        }
    }
}

#[test]
fn odd_powers_of_log_sec_vanish() {
    for i in 1..=5 {
        for n in (1..14).step_by(2) {
            assert!(log_sec_power_coeff(i, n).is_zero(), "i={i} n={n}");
        }
    }
}

#[test]
fn h_second_derivative_is_genus_series() {
    let h = closed_orbifold_H(14).unwrap();
    let caps = Caps::analytic(12, "z");
    let mut l1 = TruncSeries::zero(&caps);
    for g in 0..6u32 {
        let v = hodge_closed_form(&HodgeQuery::new(g as u64, 1, vec![]));
        let fact: Rat = (1..=2 * g as i64).map(int).product();
        l1.add_term(
            ocrc_core::Monomial::var_pow(VarId::Analytic, 2 * g),
            GaussRat::real(v / fact),
        );
    }
    assert_eq!(h.nth_derivative(2).with_caps(&caps), l1);
    assert_eq!(log_sec_half(&caps), l1);
}

#[test]
fn g_satisfies_its_quadratic() {
    let g = g_series(12);
    let x = TruncSeries::var(g.caps(), VarId::Analytic);
    assert!((&(&(&g * &g) - &g) - &x).is_zero());
    for n in 1..=10 {
        let f = f_specialized(n, 12);
        let want = g_power_coefficients(n as u32, 11);
        for (k, w) in want.iter().enumerate() {
            assert_eq!(&f.analytic_coeff(k as u32).re, w, "n={n} k={k}");
        }
    }
}

#[test]
fn catalan_double_factorial_identity() {
    for d in 1..=20u64 {
        let lhs =
            Rat::from_integer(binomial(2 * d - 1, d)) / (int(4).pow(d as i32) * int(d as i64));
        assert_eq!(lhs, double_factorial_ratio(d) / int(2 * d as i64));
    }
}
