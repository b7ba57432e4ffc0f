//! Open change of variables: resolution potential at `q = -1`, `x = iz` against the orbifold.

use num_traits::Zero;

use super::continuation::{
    a_d_at_minus_one, a_d_continuation_residual, continuation_identity, continue_rational_q,
    minus_exp_iz, target_identity_sides,
};
use crate::algebra::poly::{Poly, RationalQ};
use crate::algebra::rat::Rat;
use crate::algebra::series::{Caps, TruncSeries};
use crate::algebra::special::{cos_half, exp_iz};
use crate::algebra::{DegreeVar, GaussRat, Monomial, Side, VarId};
use crate::error::Result;
use crate::hodge::closed_orbifold_h_in;
use crate::potentials::{
    a_d_rational, open_potential_orbifold, open_potential_resolution, orbifold_caps,
    profile_monomial, SectorExpr,
};
use crate::report::Report;

/// `y^(b)_d ↦ (i/2) w_d`, `y^(t)_d ↦ (i/2) w_d (-e^{iz})^d`, `q e^x ↦ -e^{iz}`.
pub struct OpenCrcMap {
    target: Caps,
    minus_e: TruncSeries,
}

impl OpenCrcMap {
    pub fn new(target: &Caps) -> Self {
        OpenCrcMap {
            target: target.clone(),
            minus_e: minus_exp_iz(target),
        }
    }

    pub fn image(&self, v: VarId) -> Option<TruncSeries> {
        let half_i = GaussRat::new(Rat::zero(), Rat::new(1.into(), 2.into()));
        match v {
            VarId::Winding(Side::Bottom, d) => Some(
                TruncSeries::var(&self.target, VarId::winding(Side::Orbifold, d)).scale(&half_i),
            ),
            VarId::Winding(Side::Top, d) => {
                let w = TruncSeries::var(&self.target, VarId::winding(Side::Orbifold, d))
                    .scale(&half_i);
                Some(&w * &self.minus_e.pow(d))
            }
            VarId::Degree(DegreeVar::Q) => Some(self.minus_e.clone()),
            _ => None,
        }
    }

    pub fn apply(&self, s: &TruncSeries) -> Result<TruncSeries> {
        s.substitute(&self.target, |v| self.image(v))
    }
}

fn source_caps(target: &Caps, max_q: u32) -> Caps {
    Caps::analytic(1, "x")
        .with_winding(target.max_winding, target.max_boundary)
        .with_degree(DegreeVar::Q, max_q)
}

fn winding_part(m: &Monomial) -> Monomial {
    m.split(|v| matches!(v, VarId::Winding(..))).0
}

/// Multi-boundary sectors: literal substitution against the orbifold terms, every `z^m`.
pub fn check_multi_boundary(
    expr: &SectorExpr,
    orbifold: &TruncSeries,
    map: &OpenCrcMap,
    report: &mut Report,
) -> Result<()> {
    let target = orbifold.caps().clone();
    for (profile, mb) in &expr.multi_boundary {
        let grouping = SectorExpr::grouping(profile, &source_caps(&target, profile.total() as u32));
        let r = continue_rational_q(&mb.r, &target)?.scale(&mb.kappa);
        let lhs = &r * &map.apply(&grouping)?;
        let pattern = profile_monomial(profile, Side::Orbifold);
        let keep = |m: &Monomial| winding_part(m) == pattern;
        report.compare_series(&format!("ocrc.multi{profile}"), &lhs, orbifold, keep);
    }
    Ok(())
}

/// One-boundary sectors: `A_d` continued exactly, compared for `z^m` with `m ≥ 1`.
pub fn check_one_boundary(
    expr: &SectorExpr,
    orbifold: &TruncSeries,
    map: &OpenCrcMap,
    report: &mut Report,
) -> Result<()> {
    let target = orbifold.caps().clone();
    for (&d, ob) in &expr.one_boundary {
        let a = a_d_rational(d);
        let top = continue_rational_q(&a.shift(-(d as i64))?, &target)?.scale(&ob.top);
        let bottom = continue_rational_q(&a, &target)?.scale(&ob.bottom);
        let yt = map.image(VarId::winding(Side::Top, d)).expect("mapped");
        let yb = map.image(VarId::winding(Side::Bottom, d)).expect("mapped");
        let lhs = &(&(&top * &yt) + &(&bottom * &yb)) + &yb.scale(&ob.unstable);
        let pattern = Monomial::var(VarId::winding(Side::Orbifold, d));
        let check = format!("ocrc.one_boundary.d{d}");
        report.compare_series(&check, &lhs, orbifold, |m| {
            winding_part(m) == pattern && m.analytic() >= 1
        });
        // the constant term is an unstable disk: reported, not compared
        report.push(
            format!("{check}.unstable (excluded)"),
            pattern.display(target.analytic),
            lhs.coeff(&pattern),
            orbifold.coeff(&pattern),
            true,
        );
        let residual = a_d_continuation_residual(d, &target)?;
        let constant = TruncSeries::constant(&target, GaussRat::real(a_d_at_minus_one(d)));
        report.compare_series(&format!("ocrc.table.A{d}"), &residual, &constant, |_| true);
    }
    Ok(())
}

/// Closed sector through the third derivative: `-i·(-1/2 - Q/(1-Q))` at `Q = -e^{iz}`
/// against `H'''(z)`.
pub fn check_closed(order: u32, report: &mut Report) -> Result<()> {
    let caps = Caps::analytic(order.saturating_sub(3).max(1), "z");
    let third = RationalQ::new(
        Poly::new(vec![
            GaussRat::real(Rat::new((-1).into(), 2.into())),
            GaussRat::real(Rat::new((-1).into(), 2.into())),
        ]),
        Poly::one_minus_q_pow(1),
    );
    let lhs = continue_rational_q(&third, &caps)?.scale(&-GaussRat::i());
    let h = closed_orbifold_h_in(&Caps::analytic(order.max(4), "z"))
        .nth_derivative(3)
        .with_caps(&caps);
    report.compare_series("ocrc.closed.third_derivative", &lhs, &h, |_| true);

    // second derivative: iz/2 - log(1+e^{iz}) - log sec(z/2) = -log 2
    let e = exp_iz(&caps, 1);
    let half = GaussRat::real(Rat::new(1.into(), 2.into()));
    let one_plus_e_half = (&TruncSeries::one(&caps) + &e).scale(&half);
    let iz_half = TruncSeries::var(&caps, VarId::Analytic)
        .scale(&GaussRat::new(Rat::zero(), Rat::new(1.into(), 2.into())));
    let residual = &(&iz_half - &one_plus_e_half.log()?) + &cos_half(&caps).log()?;
    report.push(
        "ocrc.closed.quadratic_residual (excluded)",
        "z^0",
        "-log(2)",
        if residual.is_zero() {
            "constant"
        } else {
            "not constant"
        },
        residual.is_zero(),
    );
    Ok(())
}

/// Runs every open comparison at the given caps; `order` is the exclusive `z` bound.
pub fn verify_open_crc(
    max_winding: u32,
    max_boundary: u32,
    order: u32,
    verbose: bool,
) -> Result<Report> {
    let mut report = Report::new(verbose);
    let target = orbifold_caps(max_winding, max_boundary, order);
    let orbifold = open_potential_orbifold(&target);
    let expr = open_potential_resolution(max_winding, max_boundary);
    let map = OpenCrcMap::new(&target);

    let imag = orbifold.terms().filter(|(_, c)| !c.is_real()).count();
    report.push("ocrc.orbifold_real", "*", imag, 0, imag == 0);

    check_multi_boundary(&expr, &orbifold, &map, &mut report)?;
    check_one_boundary(&expr, &orbifold, &map, &mut report)?;
    check_closed(order, &mut report)?;

    let z = Caps::analytic(order, "z");
    for d in 1..=max_winding.max(6) {
        let (l, r) = continuation_identity(d, &z);
        report.compare_series(&format!("ocrc.continuation.d{d}"), &l, &r, |_| true);
    }
    for d in 1..=20 {
        let (l, r) = target_identity_sides(d);
        report.check_eq("ocrc.double_factorial", format!("d={d}"), &l, &r);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_crc_small() {
        let r = verify_open_crc(2, 3, 8, false).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
