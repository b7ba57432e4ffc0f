//! Open potential of `K_P1 + O_P1`: fixed-locus sum and resummed sectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::profile::{ResolutionLocus, WindingProfile};
use crate::algebra::poly::{Poly, RationalQ};
use crate::algebra::rat::{big, binomial, factorial, int, pow, sign, Rat};
use crate::algebra::series::{Caps, TruncSeries};
use crate::algebra::{DegreeVar, GaussRat, Monomial, Side, VarId};
use crate::error::{Error, Result};
use crate::hodge::compositions;

/// `∫ ψ_1^{a_1} ... ψ_m^{a_m}` over `M_{0,m}`.
pub fn psi_integral_genus0(a: &[u64]) -> Result<Rat> {
    let m = a.len();
    if m < 3 {
        return Err(Error::Unstable(m));
    }
    if a.iter().sum::<u64>() != m as u64 - 3 {
        return Ok(Rat::zero());
    }
    let den: num_bigint::BigInt = a.iter().map(|&x| factorial(x)).product();
    Ok(Rat::new(factorial(m as u64 - 3), den))
}

/// `∫ ∏ 1/(1/e_j - ψ_j)` with the one- and two-point conventions `1/e` and `1/(1/e_1 + 1/e_2)`.
pub fn node_integral(weights: &[Rat]) -> Result<Rat> {
    match weights {
        [] => Err(Error::Unstable(0)),
        [e] => Ok(e.recip()),
        [e1, e2] => Ok((e1.recip() + e2.recip()).recip()),
        _ => {
            let n = weights.len();
            let mut total = Rat::zero();
            for a in compositions(n as u64 - 3, n) {
                let w = weights
                    .iter()
                    .zip(&a)
                    .fold(Rat::one(), |acc, (e, &ai)| acc * pow(e, ai as i64 + 1));
                total += w * psi_integral_genus0(&a)?;
            }
            Ok(total)
        }
    }
}

fn central_binomial(d: u64) -> Rat {
    big(&binomial(2 * d - 1, d))
}

fn aut(loc: &ResolutionLocus) -> Rat {
    big(&(loc.kparts.aut() * loc.top.aut() * loc.bottom.aut()))
}

fn disk_parts(loc: &ResolutionLocus) -> impl Iterator<Item = u64> + '_ {
    loc.top
        .parts()
        .iter()
        .chain(loc.bottom.parts())
        .map(|&d| d as u64)
}

/// Contribution of a locus, with the string equation already applied.
pub fn resolution_locus_contribution(loc: &ResolutionLocus) -> Result<Rat> {
    if loc.is_gamma_prime {
        let d = loc.bottom.total() as i64;
        return Ok(Rat::new(1.into(), (d * d).into()));
    }
    if loc.is_empty() {
        return Err(Error::EmptyLocus);
    }
    let n_pts = (loc.kparts.len() + loc.top.len() + loc.bottom.len()) as i64;
    let mut v = -Rat::from_integer(num_bigint::BigInt::from(2).pow((n_pts - 1) as u32)) / aut(loc);
    for &k in loc.kparts.parts() {
        let k = k as u64;
        v *= sign(k as i64 + 1) / int(k as i64) * central_binomial(k);
    }
    for d in disk_parts(loc) {
        v *= sign(d as i64) * central_binomial(d);
    }
    let total = (loc.kparts.total() + loc.top.total() + loc.bottom.total()) as i64;
    Ok(v * pow(&int(total), n_pts - 3))
}

/// The same contribution, before the string equation: vertex and edge factors times the
/// node integral evaluated point by point.
pub fn resolution_locus_contribution_direct(loc: &ResolutionLocus) -> Result<Rat> {
    if loc.is_gamma_prime {
        return resolution_locus_contribution(loc);
    }
    if loc.is_empty() {
        return Err(Error::EmptyLocus);
    }
    let n_pts = loc.kparts.len() + loc.top.len() + loc.bottom.len();
    let mut v = -Rat::from_integer(num_bigint::BigInt::from(2).pow(n_pts as u32 - 1)) / aut(loc);
    let mut weights = Vec::with_capacity(n_pts);
    for &k in loc.kparts.parts() {
        let k = k as i64;
        v *= sign(k + 1) / int(k * k) * central_binomial(k as u64);
        weights.push(int(k));
    }
    for d in disk_parts(loc) {
        v *= sign(d as i64) / int(d as i64) * central_binomial(d);
        weights.push(int(d as i64));
    }
    Ok(v * node_integral(&weights)?)
}

fn winding(side: Side, d: u32) -> VarId {
    VarId::winding(side, d)
}

fn q_var() -> VarId {
    VarId::Degree(DegreeVar::Q)
}

/// Monomial attached to a locus.
pub fn locus_monomial(loc: &ResolutionLocus) -> Monomial {
    let mut pairs = vec![(q_var(), loc.q_degree() as u32)];
    pairs.extend(loc.top.parts().iter().map(|&d| (winding(Side::Top, d), 1)));
    pairs.extend(
        loc.bottom
            .parts()
            .iter()
            .map(|&d| (winding(Side::Bottom, d), 1)),
    );
    Monomial::from_pairs(pairs.into_iter().filter(|&(_, e)| e > 0))
}

/// Caps for the resolution potential: `x` only appears in the cubic term.
pub fn resolution_caps(max_winding: u32, max_boundary: u32, max_q: u32) -> Caps {
    Caps::analytic(4, "x")
        .with_winding(max_winding, max_boundary)
        .with_degree(DegreeVar::Q, max_q)
}

/// Sum over every fixed locus within the caps, plus the degree-zero cubic term.
pub fn resolution_graph_sum(caps: &Caps) -> Result<TruncSeries> {
    let mut s = TruncSeries::zero(caps);
    s.add_term(
        Monomial::var_pow(VarId::Analytic, 3),
        GaussRat::real(Rat::new((-1).into(), 12.into())),
    );
    let loci = ResolutionLocus::enumerate(
        caps.max_winding,
        caps.max_boundary as usize,
        caps.degree[DegreeVar::Q.index()],
    );
    for loc in loci {
        s.add_term(
            locus_monomial(&loc),
            GaussRat::real(resolution_locus_contribution(&loc)?),
        );
    }
    Ok(s)
}

/// `A_d = ∫_0^Q u^{d-1}/(1-u)^{2d} du` as an exact rational function.
pub fn a_d_rational(d: u32) -> RationalQ {
    let n = 2 * d - 1;
    let mut num = Poly::zero();
    for j in 0..d {
        let c = sign(j as i64) * big(&binomial((d - 1) as u64, j as u64)) / int((n - j) as i64);
        let term = Poly::one_minus_q_pow(j).sub(&Poly::one_minus_q_pow(n));
        num = num.add(&term.scale(&GaussRat::real(c)));
    }
    RationalQ::new(num, Poly::one_minus_q_pow(n))
}

/// `Σ_{k≥0} binom(k+2d-1, 2d-1)/(k+d) Q^{k+d}` up to `Q^max_q`.
pub fn a_d_series(d: u32, caps: &Caps) -> TruncSeries {
    let mut s = TruncSeries::zero(caps);
    for k in 0..=caps.degree[DegreeVar::Q.index()].saturating_sub(d) {
        let c = big(&binomial((k + 2 * d - 1) as u64, (2 * d - 1) as u64)) / int((k + d) as i64);
        s.add_term(Monomial::var_pow(q_var(), k + d), GaussRat::real(c));
    }
    s
}

/// `((-1)^{d+1}/d) binom(2d-1, d)`
pub fn one_boundary_coeff(d: u32) -> Rat {
    sign(d as i64 + 1) / int(d as i64) * central_binomial(d as u64)
}

/// `-2^{n-1}/(d |Aut|) ∏ (-1)^{d_i} binom(2d_i - 1, d_i)`
pub fn kappa(profile: &WindingProfile) -> Rat {
    let n = profile.len() as u32;
    let d = profile.total() as i64;
    let mut v =
        -Rat::from_integer(num_bigint::BigInt::from(2).pow(n - 1)) / (int(d) * big(&profile.aut()));
    for &di in profile.parts() {
        v *= sign(di as i64) * central_binomial(di as u64);
    }
    v
}

/// `Q^{-d} θ^{n-2} (Q^d/(1-Q)^{2d})` with `θ = Q d/dQ`.
pub fn multi_boundary_rational(profile: &WindingProfile) -> RationalQ {
    let d = profile.total() as usize;
    let mut r = RationalQ::q_over_one_minus_q(d, 2 * d as u32);
    for _ in 2..profile.len() {
        r = r.theta();
    }
    r.shift(-(d as i64)).expect("theta keeps the Q^d factor")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneBoundary {
    /// Coefficient of the bare `y^(b)_d` (the lone bottom disk).
    pub unstable: GaussRat,
    /// Multiplier of `Q^{-d} A_d y^(t)_d`.
    pub top: GaussRat,
    /// Multiplier of `A_d y^(b)_d`.
    pub bottom: GaussRat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiBoundary {
    pub kappa: GaussRat,
    /// `Q^{-d} θ^{n-2}(Q^d/(1-Q)^{2d})`, multiplied by `∏ (y^(t)_{d_i} + y^(b)_{d_i} Q^{d_i})`.
    pub r: RationalQ,
}

/// Resummed open potential. The closed sector is `cubic·x³ + b_coeff·Σ_k (-Q^k/k³)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorExpr {
    pub cubic: GaussRat,
    pub b_coeff: GaussRat,
    pub one_boundary: BTreeMap<u32, OneBoundary>,
    pub multi_boundary: BTreeMap<WindingProfile, MultiBoundary>,
}

pub fn open_potential_resolution(max_winding: u32, max_boundary: u32) -> SectorExpr {
    let mut one_boundary = BTreeMap::new();
    if max_boundary >= 1 {
        for d in 1..=max_winding {
            let c = GaussRat::real(one_boundary_coeff(d));
            one_boundary.insert(
                d,
                OneBoundary {
                    unstable: GaussRat::real(Rat::new(1.into(), ((d * d) as i64).into())),
                    top: c.clone(),
                    bottom: c,
                },
            );
        }
    }
    let mut multi_boundary = BTreeMap::new();
    if max_boundary >= 2 {
        for p in WindingProfile::enumerate(max_winding, 2, max_boundary as usize) {
            let mb = MultiBoundary {
                kappa: GaussRat::real(kappa(&p)),
                r: multi_boundary_rational(&p),
            };
            multi_boundary.insert(p, mb);
        }
    }
    SectorExpr {
        cubic: GaussRat::real(Rat::new((-1).into(), 12.into())),
        b_coeff: GaussRat::one(),
        one_boundary,
        multi_boundary,
    }
}

impl SectorExpr {
    pub fn closed_series(&self, caps: &Caps) -> TruncSeries {
        let mut s = TruncSeries::zero(caps);
        s.add_term(Monomial::var_pow(VarId::Analytic, 3), self.cubic.clone());
        for k in 1..=caps.degree[DegreeVar::Q.index()] as i64 {
            let c = GaussRat::real(Rat::new((-1).into(), (k * k * k).into()));
            s.add_term(Monomial::var_pow(q_var(), k as u32), &c * &self.b_coeff);
        }
        s
    }

    pub fn one_boundary_series(&self, d: u32, caps: &Caps) -> Result<TruncSeries> {
        let Some(ob) = self.one_boundary.get(&d) else {
            return Ok(TruncSeries::zero(caps));
        };
        let yt = Monomial::var(winding(Side::Top, d));
        let yb = Monomial::var(winding(Side::Bottom, d));
        let a = a_d_rational(d);
        let top = a.shift(-(d as i64))?.expand(caps, DegreeVar::Q)?;
        let bottom = a.expand(caps, DegreeVar::Q)?;
        let mut s = top.mul_monomial(&yt, &ob.top);
        s = &s + &bottom.mul_monomial(&yb, &ob.bottom);
        s.add_term(yb, ob.unstable.clone());
        Ok(s)
    }

    /// `∏ (y^(t)_{d_i} + y^(b)_{d_i} Q^{d_i})` for a profile.
    pub fn grouping(profile: &WindingProfile, caps: &Caps) -> TruncSeries {
        profile
            .parts()
            .iter()
            .fold(TruncSeries::one(caps), |acc, &d| {
                let mut f = TruncSeries::var(caps, winding(Side::Top, d));
                f.add_term(
                    Monomial::from_pairs([(winding(Side::Bottom, d), 1), (q_var(), d)]),
                    GaussRat::one(),
                );
                &acc * &f
            })
    }

    pub fn multi_boundary_series(
        &self,
        profile: &WindingProfile,
        caps: &Caps,
    ) -> Result<TruncSeries> {
        let Some(mb) = self.multi_boundary.get(profile) else {
            return Ok(TruncSeries::zero(caps));
        };
        let r = mb.r.expand(caps, DegreeVar::Q)?.scale(&mb.kappa);
        Ok(&r * &Self::grouping(profile, caps))
    }

    pub fn to_series(&self, caps: &Caps) -> Result<TruncSeries> {
        let mut s = self.closed_series(caps);
        for &d in self.one_boundary.keys() {
            s = &s + &self.one_boundary_series(d, caps)?;
        }
        for p in self.multi_boundary.keys() {
            s = &s + &self.multi_boundary_series(p, caps)?;
        }
        Ok(s)
    }
}

/// `(-1)^{d+1} binom(2d-1, d) (d+k)^{-2} [X^k] G^{2(d+k)}`, the resummed form of the
/// `y^(t)_d Q^k` coefficient.
pub fn resummed_top_coefficient(d: u32, k: u32) -> Rat {
    let g = crate::vertex::g_power_coefficients(2 * (d + k), k as usize);
    let n = (d + k) as i64;
    sign(d as i64 + 1) * central_binomial(d as u64) / int(n * n) * &g[k as usize]
}
