//! Open potential of `[C^3/Z_2]`.

use num_traits::Zero;

use super::profile::{OrbifoldLocus, WindingProfile};
use crate::algebra::rat::{big, double_factorial_ratio, factorial, int, Rat};
use crate::algebra::series::{Caps, ConstantPolicy, TruncSeries};
use crate::algebra::special::sec_pow;
use crate::algebra::{GaussRat, Monomial, Side, VarId};
use crate::hodge::{closed_orbifold_h_in, compositions, hodge_closed_form, HodgeQuery};

pub fn orbifold_caps(max_winding: u32, max_boundary: u32, order: u32) -> Caps {
    Caps::analytic(order, "z").with_winding(max_winding, max_boundary)
}

/// `(1/|Aut|) ∏ (2d_i-1)!!/(2d_i)!!`
fn profile_weight(profile: &WindingProfile) -> Rat {
    profile.parts().iter().fold(
        Rat::from_integer(1.into()) / big(&profile.aut()),
        |acc, &d| acc * double_factorial_ratio(d as u64),
    )
}

/// Coefficient of `∏ w_{d_i}` as a series in `z`, computed in `caps`'s analytic order.
/// With `twisted_only`, a single disk drops its unmarked constant `1/(2d²)`.
pub fn orbifold_vertex_series(
    profile: &WindingProfile,
    order: u32,
    twisted_only: bool,
) -> TruncSeries {
    let caps = Caps::analytic(order, "z");
    let n = profile.len() as u32;
    if n == 0 {
        return closed_orbifold_h_in(&caps);
    }
    let d = profile.total() as u32;
    let extra = n.saturating_sub(2);
    let wide = Caps::analytic(order + extra, "z");
    let jumbo = sec_pow(&wide, 2 * d).scale_rat(&Rat::new(1.into(), (2 * d as i64).into()));
    let w = GaussRat::real(profile_weight(profile));
    if n == 1 {
        let mut s = jumbo
            .with_caps(&caps)
            .antiderivative(ConstantPolicy::ValueAtZero(0))
            .scale(&w);
        if !twisted_only {
            s.add_term(
                Monomial::one(),
                GaussRat::real(Rat::new(1.into(), (2 * d as i64 * d as i64).into())),
            );
        }
        return s;
    }
    jumbo.nth_derivative(extra).with_caps(&caps).scale(&w)
}

pub fn profile_monomial(profile: &WindingProfile, side: Side) -> Monomial {
    Monomial::from_pairs(
        profile
            .parts()
            .iter()
            .map(|&d| (VarId::winding(side, d), 1)),
    )
}

/// `H(z) + Σ_d (1/(2d²) + r_d ∫ sec^{2d}(z/2)/(2d)) w_d + Σ_{n≥2} ...`
pub fn open_potential_orbifold(caps: &Caps) -> TruncSeries {
    let mut s = TruncSeries::zero(caps);
    for p in WindingProfile::enumerate(caps.max_winding, 0, caps.max_boundary as usize) {
        let v = orbifold_vertex_series(&p, caps.order, false);
        let m = profile_monomial(&p, Side::Orbifold);
        for (k, c) in v.terms() {
            s.add_term(k.mul(&m), c.clone());
        }
    }
    s
}

/// Invariant of the locus: `m` twisted points and the disks of the profile.
pub fn orbifold_locus_contribution(loc: &OrbifoldLocus) -> Rat {
    let (m, n) = (loc.m as u64, loc.profile.len() as u64);
    let d = loc.profile.total() as i64;
    // the bare unmarked disk
    if m == 0 && n == 1 {
        return Rat::new(1.into(), (2 * d * d).into());
    }
    if (m + n) % 2 == 1 || (n == 0 && m < 3) {
        return Rat::zero();
    }
    let w = profile_weight(&loc.profile);
    if m + n == 2 {
        return w / int(2 * d);
    }
    let g = (m + n - 2) / 2;
    let mut total = Rat::zero();
    for i in 1..=g {
        for j in compositions(i - 1, n as usize) {
            let weight = loc
                .profile
                .parts()
                .iter()
                .zip(&j)
                .fold(Rat::from_integer(1.into()), |acc, (&di, &ji)| {
                    acc * crate::algebra::rat::pow(&int(di as i64), ji as i64)
                });
            total += weight * hodge_closed_form(&HodgeQuery::new(g, i, j));
        }
    }
    w * total
}

/// Sum over loci, `z^m` weighted by `1/m!`.
pub fn orbifold_graph_sum(caps: &Caps) -> TruncSeries {
    let mut s = TruncSeries::zero(caps);
    for p in WindingProfile::enumerate(caps.max_winding, 0, caps.max_boundary as usize) {
        let pm = profile_monomial(&p, Side::Orbifold);
        for m in 0..caps.order {
            let loc = OrbifoldLocus {
                m,
                profile: p.clone(),
            };
            let v = orbifold_locus_contribution(&loc) / big(&factorial(m as u64));
            s.add_term(
                Monomial::var_pow(VarId::Analytic, m).mul(&pm),
                GaussRat::real(v),
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn named_coefficients() {
        let caps = orbifold_caps(2, 2, 6);
        let s = open_potential_orbifold(&caps);
        let w1 = VarId::winding(Side::Orbifold, 1);
        let w2 = VarId::winding(Side::Orbifold, 2);
        assert_eq!(
            s.coeff(&Monomial::from_pairs([(w1, 1), (VarId::Analytic, 1)]))
                .re,
            rat(1, 4)
        );
        assert_eq!(
            s.coeff(&Monomial::from_pairs([(w1, 1), (w2, 1)])).re,
            rat(1, 32)
        );
        assert_eq!(
            s.coeff(&Monomial::var_pow(VarId::Analytic, 4)).re,
            rat(1, 96)
        );
        assert_eq!(s.coeff(&Monomial::var(w1)).re, rat(1, 2));
    }

    #[test]
    fn locus_rules() {
        let p = |v: &[u32]| WindingProfile::new(v.to_vec());
        assert_eq!(
            orbifold_locus_contribution(&OrbifoldLocus {
                m: 1,
                profile: p(&[1])
            }),
            rat(1, 4)
        );
        assert_eq!(
            orbifold_locus_contribution(&OrbifoldLocus {
                m: 0,
                profile: p(&[1, 2])
            }),
            rat(1, 32)
        );
        assert_eq!(
            orbifold_locus_contribution(&OrbifoldLocus {
                m: 2,
                profile: p(&[])
            }),
            rat(0, 1)
        );
        assert_eq!(
            orbifold_locus_contribution(&OrbifoldLocus {
                m: 2,
                profile: p(&[1])
            }),
            rat(0, 1)
        );
    }

    #[test]
    fn small_route_agreement() {
        let caps = orbifold_caps(2, 3, 8);
        assert_eq!(open_potential_orbifold(&caps), orbifold_graph_sum(&caps));
    }
}
