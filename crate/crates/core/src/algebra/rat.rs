//! Exact rationals and a few integer helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient for non-negative arguments; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Binomial with a possibly negative top argument, `binom(n, k) = n(n-1)...(n-k+1)/k!`.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    if n >= 0 {
        return binomial(n as u64, k);
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j as i64;
    }
    acc / factorial(k)
}

pub fn multinomial(parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// `(-1)^n` as a rational.
pub fn sign(n: i64) -> Rat {
    if n.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// `r^n` for any integer `n`; panics on `0^n` with `n < 0`.
pub fn pow(r: &Rat, n: i64) -> Rat {
    if n >= 0 {
        num_traits::pow(r.clone(), n as usize)
    } else {
        num_traits::pow(r.recip(), n.unsigned_abs() as usize)
    }
}

/// `(2d-1)!!/(2d)!!`, computed as `binom(2d, d)/4^d`.
pub fn double_factorial_ratio(d: u64) -> Rat {
    Rat::new(binomial(2 * d, d), BigInt::from(4).pow(d as u32))
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// Renders `p/q`, or just `p` for integers.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Least common multiple of the denominators; handy when printing tables.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial_signed(-2, 3), BigInt::from(-4));
        assert_eq!(multinomial(&[1, 1]), BigInt::from(2));
        assert_eq!(catalan(4), BigInt::from(14));
    }

    #[test]
    fn lowest_terms() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rat(&r), "-3/2");
        assert_eq!(parse_rat("-3/2").unwrap(), r);
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_ratio(1), rat(1, 2));
        assert_eq!(double_factorial_ratio(2), rat(3, 8));
        assert_eq!(double_factorial_ratio(0), int(1));
    }

    #[test]
    fn binomial_over_four_power_matches_double_factorial() {
        for d in 1..=20u64 {
            let lhs =
                Rat::new(binomial(2 * d - 1, d), BigInt::from(4).pow(d as u32)) / int(d as i64);
            let rhs = double_factorial_ratio(d) / int(2 * d as i64);
            assert_eq!(lhs, rhs, "d = {d}");
        }
    }
}
