//! Univariate polynomials and rational functions in `Q`.

use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::monomial::{DegreeVar, Monomial, VarId};
use super::rat::{binomial, int};
use super::series::{Caps, TruncSeries};
use crate::error::{Error, Result};

/// Coefficients from low to high degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(Vec<GaussRat>);

impl Poly {
    pub fn new(mut c: Vec<GaussRat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    /// `c Q^k`
    pub fn monomial(k: usize, c: GaussRat) -> Self {
        let mut v = vec![GaussRat::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `(1 - Q)^n`
    pub fn one_minus_q_pow(n: u32) -> Self {
        Poly::new(
            (0..=n as u64)
                .map(|j| {
                    let b = int(if j % 2 == 0 { 1 } else { -1 })
                        * super::rat::big(&binomial(n as u64, j));
                    GaussRat::real(b)
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> GaussRat {
        self.0.get(k).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![GaussRat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += &(a * b);
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&int(k as i64)))
                .collect(),
        )
    }

    /// `Q d/dQ`
    pub fn theta(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&int(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, q: &GaussRat) -> GaussRat {
        self.0
            .iter()
            .rev()
            .fold(GaussRat::zero(), |acc, c| &(&acc * q) + c)
    }

    /// Multiply by `Q^k`; negative `k` must divide exactly.
    pub fn shift(&self, k: i64) -> Result<Poly> {
        if k >= 0 {
            let mut v = vec![GaussRat::zero(); k as usize];
            v.extend(self.0.iter().cloned());
            return Ok(Poly::new(v));
        }
        let k = k.unsigned_abs() as usize;
        if self.0.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Poly::new(self.0.iter().skip(k).cloned().collect()))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, o: &Poly) -> (Poly, Poly) {
        let dd = o.degree().expect("division by zero polynomial");
        let lead_inv = o.0[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.0.clone();
        let mut quot = vec![GaussRat::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in o.0.iter().enumerate() {
                    rem[k - dd + j] -= &(&c * b);
                }
                quot[k - dd] = c;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.degree() {
            None => Poly::zero(),
            Some(d) => {
                let inv = a.0[d].inv().expect("nonzero leading coefficient");
                a.scale(&inv)
            }
        }
    }

    /// As a series in `var`.
    pub fn to_series(&self, caps: &Caps, var: VarId) -> TruncSeries {
        TruncSeries::from_terms(
            caps,
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(var, k as u32), c.clone())),
        )
    }
}

/// `num / den` with `den(0) != 0` for expansion purposes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalQ {
    pub num: Poly,
    pub den: Poly,
}

impl RationalQ {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalQ { num, den }.reduced()
    }

    pub fn poly(p: Poly) -> Self {
        RationalQ {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::poly(Poly::constant(c))
    }

    /// `Q^k / (1-Q)^n`
    pub fn q_over_one_minus_q(k: usize, n: u32) -> Self {
        RationalQ::new(Poly::monomial(k, GaussRat::one()), Poly::one_minus_q_pow(n))
    }

    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return RationalQ {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (self.num.div_rem(&g).0, self.den.div_rem(&g).0)
        } else {
            (self.num, self.den)
        };
        // normalise so the denominator has constant term 1 when possible
        let c0 = den.coeff(0);
        if !c0.is_zero() && !c0.is_one() {
            let inv = c0.inv().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalQ { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RationalQ) -> RationalQ {
        if self.den == o.den {
            return RationalQ::new(self.num.add(&o.num), self.den.clone());
        }
        RationalQ::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn mul(&self, o: &RationalQ) -> RationalQ {
        RationalQ::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, c: &GaussRat) -> RationalQ {
        RationalQ::new(self.num.scale(c), self.den.clone())
    }

    /// Multiply by `Q^k`; negative shifts must cancel exactly against the numerator.
    pub fn shift(&self, k: i64) -> Result<RationalQ> {
        Ok(RationalQ::new(self.num.shift(k)?, self.den.clone()))
    }

    /// `Q d/dQ`, by the quotient rule.
    pub fn theta(&self) -> RationalQ {
        let n = self
            .num
            .theta()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.theta()));
        RationalQ::new(n, self.den.mul(&self.den))
    }

    pub fn eval(&self, q: &GaussRat) -> Result<GaussRat> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::ContinuationPole);
        }
        Ok(&self.num.eval(q) / &d)
    }

    /// Power series expansion around `Q = 0` in the degree variable `var`.
    pub fn expand(&self, caps: &Caps, var: DegreeVar) -> Result<TruncSeries> {
        let v = VarId::Degree(var);
        let den = self.den.to_series(caps, v).inverse()?;
        Ok(&self.num.to_series(caps, v) * &den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn one_minus_q() {
        assert_eq!(Poly::one_minus_q_pow(2), Poly::new(vec![g(1), g(-2), g(1)]));
    }

    #[test]
    fn gcd_cancels() {
        let r = RationalQ::new(Poly::one_minus_q_pow(3), Poly::one_minus_q_pow(5));
        assert_eq!(r.num, Poly::one());
        assert_eq!(r.den, Poly::one_minus_q_pow(2));
    }

    #[test]
    fn theta_of_geometric() {
        // θ(Q/(1-Q)) = Q/(1-Q)^2
        let r = RationalQ::q_over_one_minus_q(1, 1).theta();
        assert_eq!(r, RationalQ::q_over_one_minus_q(1, 2));
    }

    #[test]
    fn expansion() {
        let caps = Caps::analytic(1, "x").with_degree(DegreeVar::Q, 4);
        let s = RationalQ::q_over_one_minus_q(1, 2)
            .expand(&caps, DegreeVar::Q)
            .unwrap();
        for k in 1..=4u32 {
            assert_eq!(
                s.coeff(&Monomial::var_pow(VarId::Degree(DegreeVar::Q), k)),
                g(k as i64)
            );
        }
    }

    #[test]
    fn shift_exactness() {
        let r = RationalQ::q_over_one_minus_q(2, 1);
        assert!(r.shift(-2).is_ok());
        assert_eq!(r.shift(-3), Err(Error::InexactDivision));
    }

    #[test]
    fn evaluation() {
        let r = RationalQ::q_over_one_minus_q(1, 2);
        assert_eq!(r.eval(&g(-1)).unwrap(), GaussRat::real(rat(-1, 4)));
        assert_eq!(r.eval(&g(1)), Err(Error::ContinuationPole));
    }
}
