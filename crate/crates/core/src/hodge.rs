//! Two-part hyperelliptic Hodge integrals `L(g, i, m) = ∫ λ_g λ_{g-i} ψ^m`.
//!
//! Three routes: the closed form through powers of `log sec(x/2)`, the jumbo generating
//! function `sec^{2d}(x/2)/(2d)`, and a localization recursion used as an oracle.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_traits::Zero;

use crate::algebra::rat::{big, factorial, int, multinomial, Rat};
use crate::algebra::series::{Caps, ConstantPolicy, TruncSeries};
use crate::algebra::special::{log_sec_half, sec_pow};
use crate::error::{Error, Result};

/// ψ-exponents at the marked points. Zero entries are allowed and count as points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(pub Vec<u64>);

impl MultiIndex {
    pub fn new(entries: impl Into<Vec<u64>>) -> Self {
        MultiIndex(entries.into())
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries in decreasing order.
    pub fn normalized(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.0.iter().copied().filter(|&a| a > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeQuery {
    pub g: u64,
    pub i: u64,
    pub mbar: MultiIndex,
}

impl HodgeQuery {
    pub fn new(g: u64, i: u64, mbar: impl Into<Vec<u64>>) -> Self {
        HodgeQuery {
            g,
            i,
            mbar: MultiIndex::new(mbar),
        }
    }

    fn vanishes(&self) -> bool {
        self.i == 0 || self.mbar.total() + 1 != self.i || unstable(self.g, self.mbar.len())
    }
}

fn unstable(g: u64, points: usize) -> bool {
    2 * g + 2 < (points as u64).max(3)
}

struct LogSecPowers {
    order: u32,
    powers: Vec<TruncSeries>,
}

static LOG_SEC: LazyLock<Mutex<LogSecPowers>> = LazyLock::new(|| {
    Mutex::new(LogSecPowers {
        order: 0,
        powers: Vec::new(),
    })
});

/// Coefficient of `x^n` in `(log sec(x/2))^i`.
pub fn log_sec_power_coeff(i: u64, n: u32) -> Rat {
    let mut table = LOG_SEC.lock().expect("log sec cache poisoned");
    if n >= table.order {
        let order = (n + 1).max(table.order * 2).max(16);
        *table = LogSecPowers {
            order,
            powers: vec![TruncSeries::one(&Caps::analytic(order, "x"))],
        };
    }
    while table.powers.len() <= i as usize {
        let caps = Caps::analytic(table.order, "x");
        let next = table.powers.last().expect("nonempty") * &log_sec_half(&caps);
        table.powers.push(next);
    }
    table.powers[i as usize].analytic_coeff(n).re
}

/// `(2^{i-1}/i!) (2g)! [x^{2g}] (log sec(x/2))^i`
fn single_entry(g: u64, i: u64) -> Rat {
    Rat::new(
        num_bigint::BigInt::from(2).pow((i - 1) as u32),
        factorial(i),
    ) * big(&factorial(2 * g))
        * log_sec_power_coeff(i, (2 * g) as u32)
}

pub fn hodge_closed_form(q: &HodgeQuery) -> Rat {
    if q.vanishes() {
        return Rat::zero();
    }
    big(&multinomial(&q.mbar.0)) * single_entry(q.g, q.i)
}

/// Which families the recursion treats as known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleBase {
    /// `i = 1` and the single-entry family `m = (i-1)`.
    Standard,
    /// Only `i = 1`; single entries are reduced by the recursion as well.
    GenusSeriesOnly,
}

type MemoKey = (OracleBase, u64, u64, Vec<u64>);
static MEMO: LazyLock<Mutex<HashMap<MemoKey, Rat>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

pub fn hodge_recursion_oracle(q: &HodgeQuery) -> Rat {
    hodge_recursion_with(q, OracleBase::Standard)
}

pub fn hodge_recursion_with(q: &HodgeQuery, base: OracleBase) -> Rat {
    if q.vanishes() {
        return Rat::zero();
    }
    recurse(base, q.g, q.i, &q.mbar.normalized())
}

/// `m` holds the nonzero exponents in decreasing order.
fn recurse(base: OracleBase, g: u64, i: u64, m: &[u64]) -> Rat {
    let total: u64 = m.iter().sum();
    if i == 0 || total + 1 != i || unstable(g, m.len()) {
        return Rat::zero();
    }
    if i == 1 {
        return single_entry(g, 1);
    }
    if m.len() == 1 && base == OracleBase::Standard {
        return single_entry(g, i);
    }
    let key = (base, g, i, m.to_vec());
    if let Some(v) = MEMO.lock().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let v = recursion_step(base, g, i, m);
    MEMO.lock().expect("memo poisoned").insert(key, v.clone());
    v
}

/// One localization step. Pads with zeros to at least three points; the first point
/// (largest exponent) is split, the last two always ride with the first factor, and the
/// middle points distribute between the factors as the subset `A`.
fn recursion_step(base: OracleBase, g: u64, i: u64, m: &[u64]) -> Rat {
    let mut mm = m.to_vec();
    while mm.len() < 3 {
        mm.push(0);
    }
    let l = mm.len();
    let nfree = (2 * g + 2 - l as u64) as i64;
    let free: Vec<usize> = (1..l - 2).collect();
    let m1 = mm[0] as i64;
    let mut total = Rat::zero();
    for g1 in 0..=g {
        let g2 = g - g1;
        for k in 1..i {
            for mask in 0u64..(1 << free.len()) {
                let (a, ac): (Vec<usize>, Vec<usize>) =
                    free.iter().partition(|&&j| mask >> (j - 1) & 1 == 1);
                let m_ac: i64 = ac.iter().map(|&j| mm[j] as i64).sum();
                let a_inf = k as i64 - m_ac - 1;
                let a0 = m1 - 1 - a_inf;
                let j = 2 * g1 as i64 - 1 - a.len() as i64;
                if a_inf < 0 || a0 < 0 || j < 0 || j > nfree {
                    continue;
                }
                let mut first = vec![a0 as u64];
                first.extend(a.iter().map(|&t| mm[t]));
                first.extend([mm[l - 2], mm[l - 1]]);
                let mut second = vec![a_inf as u64];
                second.extend(ac.iter().map(|&t| mm[t]));
                let f = recurse(base, g1, i - k, &MultiIndex(first).normalized());
                if f.is_zero() {
                    continue;
                }
                let s = recurse(base, g2, k, &MultiIndex(second).normalized());
                if s.is_zero() {
                    continue;
                }
                let sign = if (k as i64 - m_ac - 1).rem_euclid(2) == 0 {
                    2
                } else {
                    -2
                };
                total +=
                    int(sign) * big(&crate::algebra::rat::binomial(nfree as u64, j as u64)) * f * s;
            }
        }
    }
    total
}

/// `(1/(2d)) sec^{2d}(x/2)` with `d = Σ dvals`.
pub fn jumbo_specialize(dvals: &[u64], order: u32) -> Result<TruncSeries> {
    if dvals.is_empty() || dvals.contains(&0) {
        return Err(Error::InvalidArgument(
            "need at least one positive degree".into(),
        ));
    }
    let d: u64 = dvals.iter().sum();
    let caps = Caps::analytic(order, "z");
    Ok(sec_pow(&caps, 2 * d as u32).scale_rat(&Rat::new(1.into(), (2 * d).into())))
}

/// `H(z)`: the double antiderivative of `log sec(z/2)` vanishing to second order.
#[allow(non_snake_case)]
pub fn closed_orbifold_H(order: u32) -> Result<TruncSeries> {
    if order < 4 {
        return Err(Error::InvalidArgument("order must be at least 4".into()));
    }
    Ok(closed_orbifold_h_in(&Caps::analytic(order, "z")))
}

pub(crate) fn closed_orbifold_h_in(caps: &Caps) -> TruncSeries {
    log_sec_half(caps)
        .antiderivative(ConstantPolicy::ValueAtZero(0))
        .antiderivative(ConstantPolicy::ValueAtZero(0))
}

/// All weak compositions of `total` into `parts` non-negative entries.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in 0..=total {
        for mut rest in compositions(total - a, parts - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeRow {
    pub g: u64,
    pub i: u64,
    pub mbar: Vec<u64>,
    pub value: Rat,
}

/// Closed-form values for `g ≤ max_genus`, `i ≤ max_i`, one row per sorted nonzero `m`.
pub fn hodge_table(max_genus: u64, max_i: u64) -> Vec<HodgeRow> {
    let mut rows = Vec::new();
    for g in 1..=max_genus {
        for i in 1..=max_i.min(g) {
            for m in partitions(i - 1, i - 1) {
                if m.len() as u64 > 2 * g + 2 {
                    continue;
                }
                let value = hodge_closed_form(&HodgeQuery::new(g, i, m.clone()));
                rows.push(HodgeRow {
                    g,
                    i,
                    mbar: m,
                    value,
                });
            }
        }
    }
    rows
}

/// Partitions of `n` with parts at most `max`, in decreasing order.
pub fn partitions(n: u64, max: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn closed_form_values() {
        assert_eq!(hodge_closed_form(&HodgeQuery::new(1, 1, vec![])), rat(1, 4));
        assert_eq!(hodge_closed_form(&HodgeQuery::new(2, 1, vec![])), rat(1, 8));
        assert_eq!(
            hodge_closed_form(&HodgeQuery::new(2, 2, vec![1])),
            rat(3, 8)
        );
        assert_eq!(
            hodge_closed_form(&HodgeQuery::new(2, 2, vec![2])),
            rat(0, 1)
        );
        assert_eq!(hodge_closed_form(&HodgeQuery::new(0, 1, vec![])), rat(0, 1));
    }

    #[test]
    fn multinomial_relation() {
        for g in 2..6 {
            let a = hodge_closed_form(&HodgeQuery::new(g, 3, vec![1, 1]));
            let b = hodge_closed_form(&HodgeQuery::new(g, 3, vec![2]));
            assert_eq!(a, int(2) * b);
        }
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(
            hodge_recursion_oracle(&HodgeQuery::new(1, 1, vec![])),
            rat(1, 4)
        );
        assert_eq!(
            hodge_recursion_oracle(&HodgeQuery::new(2, 1, vec![])),
            rat(1, 8)
        );
        assert_eq!(
            hodge_recursion_oracle(&HodgeQuery::new(2, 2, vec![1])),
            rat(3, 8)
        );
        assert_eq!(
            hodge_recursion_oracle(&HodgeQuery::new(3, 3, vec![1, 1])),
            hodge_closed_form(&HodgeQuery::new(3, 3, vec![1, 1]))
        );
    }

    #[test]
    fn too_many_points_vanish() {
        let q = HodgeQuery::new(1, 1, vec![0, 0, 0, 0, 0]);
        assert!(hodge_closed_form(&q).is_zero());
        assert!(hodge_recursion_oracle(&q).is_zero());
    }

    #[test]
    fn jumbo() {
        let j = jumbo_specialize(&[1], 4).unwrap();
        assert_eq!(j.analytic_coeff(0).re, rat(1, 2));
        assert_eq!(j.analytic_coeff(2).re, rat(1, 8));
        assert_eq!(
            jumbo_specialize(&[1, 2], 8).unwrap(),
            jumbo_specialize(&[3], 8).unwrap()
        );
        assert!(jumbo_specialize(&[], 4).is_err());
    }

    #[test]
    fn h_series() {
        let h = closed_orbifold_H(8).unwrap();
        assert_eq!(h.analytic_coeff(4).re, rat(1, 96));
        assert!(h.analytic_coeff(3).is_zero());
        assert_eq!(
            h.analytic_coeff(4).re * int(24),
            hodge_closed_form(&HodgeQuery::new(1, 1, vec![]))
        );
        assert!(closed_orbifold_H(3).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(compositions(2, 3).len(), 6);
    }
}
