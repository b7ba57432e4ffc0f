//! Trigonometric and exponential series in the analytic variable.

use num_traits::Zero;

use super::gauss::GaussRat;
use super::rat::{factorial, int, Rat};
use super::series::{Caps, TruncSeries};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Special {
    /// `sec^n(z/2)`
    SecPow(u32),
    /// `tan(z/2)`
    TanHalf,
    /// `log sec(z/2)`
    LogSecHalf,
    /// `e^{iz}`
    ExpIz,
}

pub fn special_series(name: Special, order: u32) -> Result<TruncSeries> {
    if order < 1 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let caps = Caps::analytic(order, "z");
    Ok(match name {
        Special::SecPow(n) => sec_pow(&caps, n),
        Special::TanHalf => tan_half(&caps),
        Special::LogSecHalf => log_sec_half(&caps),
        Special::ExpIz => exp_iz(&caps, 1),
    })
}

fn half_angle(caps: &Caps, odd: bool) -> TruncSeries {
    // cos(z/2) = Σ (-1)^k z^{2k} / (4^k (2k)!), sin(z/2) = Σ (-1)^k z^{2k+1} / (2^{2k+1} (2k+1)!)
    let mut coeffs = vec![GaussRat::zero(); caps.order as usize];
    let start = usize::from(odd);
    for n in (start..caps.order as usize).step_by(2) {
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        let den = factorial(n as u64) * num_bigint::BigInt::from(2).pow(n as u32);
        coeffs[n] = GaussRat::real(Rat::new(sign.into(), den));
    }
    TruncSeries::from_analytic(caps, coeffs)
}

pub fn cos_half(caps: &Caps) -> TruncSeries {
    half_angle(caps, false)
}

pub fn sin_half(caps: &Caps) -> TruncSeries {
    half_angle(caps, true)
}

/// `sec^n(z/2)`, as the `(-n)`-th power of the cosine series.
pub fn sec_pow(caps: &Caps, n: u32) -> TruncSeries {
    cos_half(caps).inverse().expect("cos(0) = 1").pow(n)
}

pub fn tan_half(caps: &Caps) -> TruncSeries {
    &sin_half(caps) * &sec_pow(caps, 1)
}

pub fn log_sec_half(caps: &Caps) -> TruncSeries {
    -&cos_half(caps).log().expect("cos(0) = 1")
}

/// `e^{ikz}`
pub fn exp_iz(caps: &Caps, k: i64) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(caps.order as usize);
    let mut c = GaussRat::from_int(1);
    let step = GaussRat::new(Rat::zero(), int(k));
    for n in 0..caps.order as i64 {
        coeffs.push(c.clone());
        c = (&c * &step).scale(&Rat::new(1.into(), (n + 1).into()));
    }
    TruncSeries::from_analytic(caps, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::algebra::series::ConstantPolicy;

    fn g(n: i64, d: i64) -> GaussRat {
        GaussRat::real(rat(n, d))
    }

    #[test]
    fn exp_iz_low_terms() {
        let e = special_series(Special::ExpIz, 5).unwrap();
        let want = [
            g(1, 1),
            GaussRat::i(),
            g(-1, 2),
            GaussRat::new(rat(0, 1), rat(-1, 6)),
            g(1, 24),
        ];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(&e.analytic_coeff(k as u32), w);
        }
    }

    #[test]
    fn log_sec_low_terms() {
        let s = special_series(Special::LogSecHalf, 6).unwrap();
        assert_eq!(s.analytic_coeff(2), g(1, 8));
        assert_eq!(s.analytic_coeff(4), g(1, 192));
        assert_eq!(s.analytic_coeff(3), g(0, 1));
    }

    #[test]
    fn sec_powers() {
        let s2 = special_series(Special::SecPow(2), 6).unwrap();
        assert_eq!(s2.analytic_coeff(0), g(1, 1));
        assert_eq!(s2.analytic_coeff(2), g(1, 4));
        assert_eq!(s2.analytic_coeff(4), g(1, 24));
        assert_eq!(
            special_series(Special::SecPow(0), 6).unwrap(),
            TruncSeries::one(s2.caps())
        );
        assert_eq!(
            special_series(Special::SecPow(4), 6)
                .unwrap()
                .analytic_coeff(2),
            g(1, 2)
        );
    }

    #[test]
    fn tan_is_integral_of_half_sec_squared() {
        let caps = Caps::analytic(10, "z");
        let integral = sec_pow(&caps, 2)
            .scale_rat(&rat(1, 2))
            .antiderivative(ConstantPolicy::ValueAtZero(0));
        let t = tan_half(&caps);
        assert_eq!(integral, t);
        assert_eq!(t.analytic_coeff(1), g(1, 2));
        assert_eq!(t.analytic_coeff(3), g(1, 24));
    }

    #[test]
    fn bad_order() {
        assert!(special_series(Special::TanHalf, 0).is_err());
    }
}
