//! Substituting `Q = -e^{iz}` into rational functions, and the images of `A_d`.

use num_traits::Zero;

use crate::algebra::poly::{Poly, RationalQ};
use crate::algebra::rat::{big, binomial, double_factorial_ratio, int, sign, Rat};
use crate::algebra::series::{Caps, ConstantPolicy, TruncSeries};
use crate::algebra::special::{exp_iz, sec_pow};
use crate::algebra::GaussRat;
use crate::error::{Error, Result};
use crate::potentials::a_d_rational;

/// `-e^{iz}` in the analytic variable of `caps`.
pub fn minus_exp_iz(caps: &Caps) -> TruncSeries {
    -&exp_iz(caps, 1)
}

/// `p(-e^{iz})` by Horner's rule.
pub fn continue_poly(p: &Poly, caps: &Caps) -> TruncSeries {
    let q = minus_exp_iz(caps);
    p.coeffs()
        .iter()
        .rev()
        .fold(TruncSeries::zero(caps), |acc, c| {
            let mut next = &acc * &q;
            next.add_term(crate::algebra::Monomial::one(), c.clone());
            next
        })
}

/// `r(-e^{iz})` expanded in `z`. The denominator must not vanish at `Q = -1`.
pub fn continue_rational_q(r: &RationalQ, caps: &Caps) -> Result<TruncSeries> {
    if r.den.eval(&GaussRat::from_int(-1)).is_zero() {
        return Err(Error::ContinuationPole);
    }
    let num = continue_poly(&r.num, caps);
    let den = continue_poly(&r.den, caps);
    Ok(&num * &den.inverse()?)
}

/// `S_d(z) = ∫_0^z sec^{2d}(u/2) du`
pub fn s_d(d: u32, caps: &Caps) -> TruncSeries {
    sec_pow(caps, 2 * d).antiderivative(ConstantPolicy::ValueAtZero(0))
}

/// Table image of `A_d`: `i (-1)^d 4^{-d} S_d(z)`, up to an additive constant.
pub fn a_d_image(d: u32, caps: &Caps) -> TruncSeries {
    let c = GaussRat::new(
        Rat::zero(),
        sign(d as i64) / Rat::from_integer(num_bigint::BigInt::from(4).pow(d)),
    );
    s_d(d, caps).scale(&c)
}

/// `A_d(-1)`, the constant the table leaves open: `(-1)^d / (2d binom(2d-1, d))`.
pub fn a_d_at_minus_one(d: u32) -> Rat {
    sign(d as i64) / (int(2 * d as i64) * big(&binomial(2 * d as u64 - 1, d as u64)))
}

/// Checks `(-E)^d/(1+E)^{2d} = (-1)^d 4^{-d} sec^{2d}(z/2)` with `E = e^{iz}`.
pub fn continuation_identity(d: u32, caps: &Caps) -> (TruncSeries, TruncSeries) {
    let lhs = continue_rational_q(&RationalQ::q_over_one_minus_q(d as usize, 2 * d), caps)
        .expect("(1-Q)^{2d} is 4^d at Q = -1");
    let rhs = sec_pow(caps, 2 * d)
        .scale_rat(&(sign(d as i64) / Rat::from_integer(num_bigint::BigInt::from(4).pow(d))));
    (lhs, rhs)
}

/// Continued `A_d` minus its table image: should be the constant `A_d(-1)`.
pub fn a_d_continuation_residual(d: u32, caps: &Caps) -> Result<TruncSeries> {
    Ok(&continue_rational_q(&a_d_rational(d), caps)? - &a_d_image(d, caps))
}

/// `binom(2d-1, d)/(d 4^d)` and `((2d-1)!!/(2d)!!)/(2d)`.
pub fn target_identity_sides(d: u32) -> (Rat, Rat) {
    let lhs = big(&binomial(2 * d as u64 - 1, d as u64))
        / (int(d as i64) * Rat::from_integer(num_bigint::BigInt::from(4).pow(d)));
    (lhs, double_factorial_ratio(d as u64) / int(2 * d as i64))
}
