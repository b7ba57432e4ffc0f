//! Closed change of variables, checked tree by tree.

use num_traits::{One, Zero};

use super::continuation::{continue_rational_q, minus_exp_iz};
use crate::algebra::rat::{int, sign, Rat};
use crate::algebra::series::{Caps, TruncSeries};
use crate::algebra::special::exp_iz;
use crate::algebra::{DegreeVar, GaussRat, Monomial, Side, VarId};
use crate::error::Result;
use crate::potentials::{
    closed_tree_contribution_orbifold, closed_tree_contribution_resolution,
    enumerate_trees_bounded, orbifold_vertex_series, p_exp_w, profile_monomial,
    resolution_vertex_coefficient, Color, LocalizationTree, WindingProfile,
};
use crate::report::Report;

/// `Q ↦ -1`, `U ↦ -P`, `X ↦ iZ`, `Y ↦ iZ + W` together with
/// `y^(b)_d ↦ (i/2) w_d`, `y^(t)_d ↦ (i/2)(-e^{iZ})^d w_d`,
/// `ỹ^(b)_d ↦ (i/2) e^{idZ} w̃_d`, `ỹ^(t)_d ↦ (-1)^d (i/2) w̃_d`.
pub struct ClosedCrcMap {
    target: Caps,
    e: TruncSeries,
}

impl ClosedCrcMap {
    pub fn new(target: &Caps) -> Self {
        ClosedCrcMap {
            target: target.clone(),
            e: exp_iz(target, 1),
        }
    }

    pub fn target(&self) -> &Caps {
        &self.target
    }

    pub fn image(&self, v: VarId) -> Option<TruncSeries> {
        let half_i = GaussRat::new(Rat::zero(), Rat::new(1.into(), 2.into()));
        let var = |side, d| TruncSeries::var(&self.target, VarId::winding(side, d)).scale(&half_i);
        match v {
            VarId::Winding(Side::Bottom, d) => Some(var(Side::Orbifold, d)),
            VarId::Winding(Side::Top, d) => Some(&var(Side::Orbifold, d) * &(-&self.e).pow(d)),
            VarId::Winding(Side::BottomTilde, d) => {
                Some(&var(Side::OrbifoldTilde, d) * &self.e.pow(d))
            }
            VarId::Winding(Side::TopTilde, d) => {
                Some(var(Side::OrbifoldTilde, d).scale_rat(&sign(d as i64)))
            }
            VarId::Degree(DegreeVar::Q) => Some(minus_exp_iz(&self.target)),
            VarId::Degree(DegreeVar::U) => {
                let p = TruncSeries::var(&self.target, VarId::Degree(DegreeVar::P));
                let w = TruncSeries::var(&self.target, VarId::Degree(DegreeVar::W))
                    .exp()
                    .expect("zero constant");
                Some(&(&(-&p) * &self.e) * &w)
            }
            _ => None,
        }
    }

    pub fn apply(&self, s: &TruncSeries) -> Result<TruncSeries> {
        s.substitute(&self.target, |v| self.image(v))
    }
}

fn winding_source_caps(target: &Caps) -> Caps {
    Caps::analytic(1, "X")
        .with_winding(target.max_winding, target.max_boundary)
        .with_degree(DegreeVar::U, target.degree[DegreeVar::P.index()])
}

/// Image of one resolution vertex term `V^(S)(v)` times its winding monomial.
pub fn vertex_image(
    map: &ClosedCrcMap,
    color: Color,
    labels: &[u32],
    in_s: &[bool],
) -> Result<TruncSeries> {
    let top: Vec<bool> = match color {
        Color::Black => in_s.to_vec(),
        Color::White => in_s.iter().map(|b| !b).collect(),
    };
    let coeff = continue_rational_q(&resolution_vertex_coefficient(labels, &top), map.target())?;
    let src = winding_source_caps(map.target());
    let monomial = Monomial::from_pairs(labels.iter().zip(in_s).map(|(&d, &s)| {
        let side = match (color, s) {
            (Color::Black, true) => Side::Top,
            (Color::Black, false) => Side::Bottom,
            (Color::White, true) => Side::TopTilde,
            (Color::White, false) => Side::BottomTilde,
        };
        (VarId::winding(side, d), 1)
    }));
    let m = map.apply(&TruncSeries::monomial(&src, monomial, GaussRat::one()))?;
    Ok(&coeff * &m)
}

/// Expected image: `½V ∓ (i/4d²) w` at a leaf (signs and `(-1)^d` per colour), `2^{-n} V` otherwise.
pub fn vertex_expected(target: &Caps, color: Color, labels: &[u32], in_s: &[bool]) -> TruncSeries {
    let profile = WindingProfile::new(labels.to_vec());
    let n = labels.len();
    let d = profile.total() as i64;
    let (side, tilde_sign) = match color {
        Color::Black => (Side::Orbifold, Rat::one()),
        Color::White => (Side::OrbifoldTilde, sign(d)),
    };
    let v = orbifold_vertex_series(&profile, target.order, n == 1)
        .with_caps(target)
        .scale_rat(&tilde_sign);
    let mono = profile_monomial(&profile, side);
    let half_power = Rat::new(1.into(), num_bigint::BigInt::from(2).pow(n as u32));
    let mut s = v.mul_monomial(&mono, &GaussRat::real(half_power));
    if n == 1 {
        let c = Rat::new(1.into(), (4 * d * d).into());
        let sgn = match (color, in_s[0]) {
            (Color::Black, true) => -Rat::one(),
            (Color::Black, false) => Rat::one(),
            (Color::White, true) => sign(d),
            (Color::White, false) => -sign(d),
        };
        s.add_term(mono, GaussRat::new(Rat::zero(), c * sgn));
    }
    s
}

/// Every vertex configuration: labels `≤ max_label`, valence `≤ max_valence`, label sum
/// `≤ max_total`, each subset `S`, both colours.
pub fn check_vertex_identities(
    target: &Caps,
    max_label: u32,
    max_valence: usize,
    max_total: u32,
    report: &mut Report,
) -> Result<()> {
    let map = ClosedCrcMap::new(target);
    for profile in WindingProfile::enumerate(max_label, 1, max_valence) {
        if profile.total() > max_total as u64 {
            continue;
        }
        let labels = profile.parts();
        for mask in 0u32..(1 << labels.len()) {
            let in_s: Vec<bool> = (0..labels.len()).map(|i| mask >> i & 1 == 1).collect();
            for (color, name) in [
                (Color::Black, "vertex_black"),
                (Color::White, "vertex_white"),
            ] {
                let lhs = vertex_image(&map, color, labels, &in_s)?;
                let rhs = vertex_expected(target, color, labels, &in_s);
                report.compare_series(
                    &format!("ccrc.{name}{profile}.S{mask:b}"),
                    &lhs,
                    &rhs,
                    |_| true,
                );
            }
        }
    }
    Ok(())
}

/// `E′(e) ↦ 2E(e)`, with the division by winding variables done by coefficient extraction.
pub fn check_edge_identity(target: &Caps, max_label: u32, report: &mut Report) -> Result<()> {
    let target = &target.clone().with_winding(max_label, 2);
    let map = ClosedCrcMap::new(target);
    let src = winding_source_caps(target);
    for d in 1..=max_label {
        let u = map.apply(&TruncSeries::monomial(
            &src,
            Monomial::var_pow(VarId::Degree(DegreeVar::U), d),
            GaussRat::from_int(-(d as i64)),
        ))?;
        let pair = Monomial::from_pairs([
            (VarId::winding(Side::Orbifold, d), 1),
            (VarId::winding(Side::OrbifoldTilde, d), 1),
        ]);
        for (in_s, sides) in [
            (true, (Side::Top, Side::TopTilde)),
            (false, (Side::Bottom, Side::BottomTilde)),
        ] {
            let yy = Monomial::from_pairs([
                (VarId::winding(sides.0, d), 1),
                (VarId::winding(sides.1, d), 1),
            ]);
            let image = map.apply(&TruncSeries::monomial(&src, yy, GaussRat::one()))?;
            let s = image.extract(&pair, |v| matches!(v, VarId::Winding(..)));
            let two_e = p_exp_w(d, target).scale_rat(&(sign(d as i64) * int(4 * d as i64)));
            let rhs = &two_e * &s;
            report.compare_series(
                &format!("ccrc.edge.d{d}.{}", if in_s { "in_S" } else { "out_S" }),
                &u,
                &rhs,
                |_| true,
            );
        }
    }
    Ok(())
}

/// Image of `GW_Y(T)`: the continued coefficient times `(-P e^{iZ} e^W)^D`.
pub fn resolution_tree_image(t: &LocalizationTree, map: &ClosedCrcMap) -> Result<TruncSeries> {
    let term = closed_tree_contribution_resolution(t);
    let c = continue_rational_q(&term.coefficient, map.target())?;
    let u = map
        .image(VarId::Degree(DegreeVar::U))
        .expect("mapped")
        .pow(term.u_degree);
    Ok(&c * &u)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedCaps {
    pub max_edges: usize,
    pub max_label: u32,
    /// Largest `Z` exponent compared.
    pub z_order: u32,
    pub max_w: u32,
    pub max_p: u32,
}

impl Default for ClosedCaps {
    fn default() -> Self {
        ClosedCaps {
            max_edges: 4,
            max_label: 3,
            z_order: 8,
            max_w: 4,
            max_p: 6,
        }
    }
}

impl ClosedCaps {
    pub fn target(&self) -> Caps {
        Caps::analytic(self.z_order + 1, "Z")
            .with_winding(self.max_label, self.max_edges as u32)
            .with_degree(DegreeVar::P, self.max_p)
            .with_degree(DegreeVar::W, self.max_w)
    }
}

pub fn verify_closed_crc(caps: ClosedCaps, verbose: bool) -> Result<Report> {
    let mut report = Report::new(verbose);
    let target = caps.target();
    let map = ClosedCrcMap::new(&target);
    check_vertex_identities(
        &target,
        caps.max_label,
        caps.max_edges,
        caps.max_p,
        &mut report,
    )?;
    check_edge_identity(&target, caps.max_label.max(4), &mut report)?;

    let trees = enumerate_trees_bounded(caps.max_p, caps.max_label, caps.max_edges);
    report.push(
        "ccrc.tree_count",
        "*",
        trees.len(),
        "enumerated",
        !trees.is_empty(),
    );
    let mut total_y = TruncSeries::zero(&target);
    let mut total_x = TruncSeries::zero(&target);
    for t in &trees {
        let lhs = resolution_tree_image(t, &map)?;
        let rhs = closed_tree_contribution_orbifold(t, &target);
        report.compare_series(&format!("ccrc.tree.{t}"), &lhs, &rhs, |_| true);
        if t.is_single_edge() {
            let d = t.total_degree();
            let m = Monomial::var_pow(VarId::Degree(DegreeVar::P), d);
            let want = GaussRat::real(Rat::new(1.into(), (2 * (d as i64).pow(3)).into()));
            let (l, r) = (lhs.coeff(&m), rhs.coeff(&m));
            report.push(
                format!("ccrc.single_edge_extra.d{d}"),
                m.display("Z"),
                &l,
                &want,
                l == want && r == want,
            );
        }
        total_y = &total_y + &lhs;
        total_x = &total_x + &rhs;
    }
    // labelled-tree totals; no claim about their normalisation
    report.compare_series("ccrc.tree_total", &total_y, &total_x, |m| {
        m.analytic() == 0 && m.degree(DegreeVar::W) == 0
    });
    for (k, want) in [
        (1u32, Rat::new(1.into(), 2.into())),
        (2, Rat::new(1.into(), 16.into())),
    ] {
        if k <= caps.max_p {
            let m = Monomial::var_pow(VarId::Degree(DegreeVar::P), k);
            let got = total_x.coeff(&m);
            report.check_eq("ccrc.anchor", m.display("Z"), &got, &GaussRat::real(want));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_crc_small() {
        let caps = ClosedCaps {
            max_edges: 2,
            max_label: 2,
            z_order: 4,
            max_w: 1,
            max_p: 3,
        };
        let r = verify_closed_crc(caps, false).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
