//! Truncated multivariate power series with Gaussian rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::gauss::GaussRat;
use super::monomial::{DegreeVar, Monomial, VarId};
use super::rat::{format_rat, int, parse_rat, Rat};
use crate::error::{Error, Result};

/// Truncation caps. A monomial survives iff every bound holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    /// Exclusive bound on the analytic exponent.
    pub order: u32,
    /// Largest admissible `d` in a winding variable.
    pub max_winding: u32,
    /// Largest total exponent of winding variables.
    pub max_boundary: u32,
    /// Inclusive caps for q, P, U, W.
    pub degree: [u32; 4],
    /// Printed name of the analytic variable.
    pub analytic: &'static str,
}

impl Caps {
    pub fn analytic(order: u32, name: &'static str) -> Self {
        Caps {
            order,
            max_winding: 0,
            max_boundary: 0,
            degree: [0; 4],
            analytic: name,
        }
    }

    pub fn with_winding(mut self, max_winding: u32, max_boundary: u32) -> Self {
        self.max_winding = max_winding;
        self.max_boundary = max_boundary;
        self
    }

    pub fn with_degree(mut self, v: DegreeVar, cap: u32) -> Self {
        self.degree[v.index()] = cap;
        self
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = order;
        self
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        let mut boundary = 0;
        for &(v, e) in m.pairs() {
            match v {
                VarId::Analytic => {
                    if e >= self.order {
                        return false;
                    }
                }
                VarId::Winding(_, d) => {
                    if d > self.max_winding {
                        return false;
                    }
                    boundary += e;
                }
                VarId::Degree(dv) => {
                    if e > self.degree[dv.index()] {
                        return false;
                    }
                }
            }
        }
        boundary <= self.max_boundary
    }

    /// Sum of all finite caps; every nonconstant monomial has positive weight below it,
    /// so `weight_bound + 1` bounds the nilpotency index of non-constant parts.
    fn weight_bound(&self) -> u32 {
        self.order + self.max_boundary + self.degree.iter().sum::<u32>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantPolicy {
    /// Constant of integration is this value at the origin.
    ValueAtZero(i64),
    /// Discard every term that does not depend on the analytic variable.
    Drop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    caps: Caps,
    terms: BTreeMap<Monomial, GaussRat>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: BTreeMap<String, u32>,
    re: String,
    im: String,
}

impl TruncSeries {
    pub fn zero(caps: &Caps) -> Self {
        TruncSeries {
            caps: caps.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(caps: &Caps, c: GaussRat) -> Self {
        Self::monomial(caps, Monomial::one(), c)
    }

    pub fn one(caps: &Caps) -> Self {
        Self::constant(caps, GaussRat::one())
    }

    pub fn monomial(caps: &Caps, m: Monomial, c: GaussRat) -> Self {
        let mut s = Self::zero(caps);
        s.add_term(m, c);
        s
    }

    pub fn var(caps: &Caps, v: VarId) -> Self {
        Self::monomial(caps, Monomial::var(v), GaussRat::one())
    }

    /// Analytic-only series from coefficients `c_0, c_1, ...`.
    pub fn from_analytic(caps: &Caps, coeffs: impl IntoIterator<Item = GaussRat>) -> Self {
        let mut s = Self::zero(caps);
        for (k, c) in coeffs.into_iter().enumerate() {
            s.add_term(Monomial::var_pow(VarId::Analytic, k as u32), c);
        }
        s
    }

    pub fn from_terms(caps: &Caps, terms: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut s = Self::zero(caps);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn order(&self) -> u32 {
        self.caps.order
    }

    /// Adds `c·m`, silently dropping it if `m` is outside the caps.
    pub fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() || !self.caps.admits(&m) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRat {
        self.terms.get(m).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Coefficient of `analytic^k` with no other variables.
    pub fn analytic_coeff(&self, k: u32) -> GaussRat {
        self.coeff(&Monomial::var_pow(VarId::Analytic, k))
    }

    pub fn constant_term(&self) -> GaussRat {
        self.coeff(&Monomial::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussRat::is_real)
    }

    /// Same terms under different caps (drops whatever the new caps exclude).
    pub fn with_caps(&self, caps: &Caps) -> Self {
        Self::from_terms(caps, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.caps == o.caps {
            Ok(())
        } else {
            Err(Error::CapMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(&self.caps);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1.analytic() + m2.analytic() >= self.caps.order {
                    continue;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = Self::zero(&self.caps);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&GaussRat::real(r.clone()))
    }

    /// Multiplies by `c·m`.
    pub fn mul_monomial(&self, m: &Monomial, c: &GaussRat) -> Self {
        let mut out = Self::zero(&self.caps);
        for (k, x) in &self.terms {
            out.add_term(k.mul(m), x * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Monomial, &GaussRat) -> GaussRat) -> Self {
        Self::from_terms(
            &self.caps,
            self.terms.iter().map(|(m, c)| (m.clone(), f(m, c))),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.caps);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow_int(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inverse()?.pow(n.unsigned_abs() as u32))
        }
    }

    fn without_constant(&self) -> Self {
        let mut r = self.clone();
        r.terms.remove(&Monomial::one());
        r
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let c0_inv = c0.inv()?;
        // 1/(c0 + r) = c0^-1 Σ (-r/c0)^k
        let step = self.without_constant().scale(&-&c0_inv);
        let mut term = Self::one(&self.caps);
        let mut acc = term.clone();
        for _ in 0..=self.caps.weight_bound() {
            term = &term * &step;
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc.scale(&c0_inv))
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpConstant);
        }
        let mut term = Self::one(&self.caps);
        let mut acc = term.clone();
        for k in 1..=(self.caps.weight_bound() as i64 + 1) {
            term = (&term * self).scale_rat(&Rat::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::LogConstant);
        }
        let r = self.without_constant();
        let mut power = Self::one(&self.caps);
        let mut acc = Self::zero(&self.caps);
        for k in 1..=(self.caps.weight_bound() as i64 + 1) {
            power = &power * &r;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale_rat(&Rat::new(sign.into(), k.into()));
        }
        Ok(acc)
    }

    /// Derivative in the analytic variable.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(&self.caps);
        for (m, c) in &self.terms {
            let e = m.analytic();
            if e > 0 {
                let m2 = m.shift(VarId::Analytic, -1).expect("positive exponent");
                out.add_term(m2, c.scale(&int(e as i64)));
            }
        }
        out
    }

    pub fn nth_derivative(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |s, _| s.derivative())
    }

    /// Antiderivative in the analytic variable. Terms pushed past the order are dropped.
    pub fn antiderivative(&self, policy: ConstantPolicy) -> Self {
        let mut out = Self::zero(&self.caps);
        for (m, c) in &self.terms {
            let e = m.analytic();
            let m2 = m.shift(VarId::Analytic, 1).expect("raising is always fine");
            out.add_term(m2, c.scale(&Rat::new(1.into(), (e as i64 + 1).into())));
        }
        if let ConstantPolicy::ValueAtZero(v) = policy {
            out.add_term(Monomial::one(), GaussRat::from_int(v));
        }
        out
    }

    /// `v ∂/∂v` for a degree variable: multiplies each term by its `v`-exponent.
    pub fn euler(&self, v: DegreeVar) -> Self {
        self.map_coeffs(|m, c| c.scale(&int(m.degree(v) as i64)))
    }

    /// Terms whose `vars`-part equals `pattern`, with that part removed.
    pub fn extract(&self, pattern: &Monomial, vars: impl Fn(&VarId) -> bool) -> Self {
        let mut out = Self::zero(&self.caps);
        for (m, c) in &self.terms {
            let (sel, rest) = m.split(&vars);
            if &sel == pattern {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self::from_terms(
            &self.caps,
            self.terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Substitutes series for variables. Variables with no image are kept as they are.
    /// All images must live in `target`.
    pub fn substitute(
        &self,
        target: &Caps,
        image: impl Fn(VarId) -> Option<TruncSeries>,
    ) -> Result<Self> {
        let mut cache: HashMap<VarId, Vec<TruncSeries>> = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for &(v, e) in m.pairs() {
                let powers = match cache.entry(v) {
                    std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        let base = match image(v) {
                            Some(s) => {
                                if s.caps != *target {
                                    return Err(Error::CapMismatch);
                                }
                                s
                            }
                            None => Self::var(target, v),
                        };
                        slot.insert(vec![Self::one(target), base])
                    }
                };
                while powers.len() <= e as usize {
                    let next = &powers[powers.len() - 1] * &powers[1];
                    powers.push(next);
                }
                acc = &acc * &powers[e as usize];
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rows: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                monomial: m
                    .pairs()
                    .iter()
                    .map(|(v, e)| (v.name(self.caps.analytic), *e))
                    .collect(),
                re: format_rat(&c.re),
                im: format_rat(&c.im),
            })
            .collect();
        serde_json::to_value(rows).expect("plain data serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json(caps: &Caps, text: &str) -> Result<Self> {
        let rows: Vec<TermJson> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut s = Self::zero(caps);
        for row in rows {
            let mut pairs = Vec::new();
            for (name, e) in row.monomial {
                pairs.push((VarId::parse(&name, caps.analytic)?, e));
            }
            s.add_term(
                Monomial::from_pairs(pairs),
                GaussRat::new(parse_rat(&row.re)?, parse_rat(&row.im)?),
            );
        }
        Ok(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("monomial,re,im\n");
        for (m, c) in &self.terms {
            out.push_str(&format!(
                "{},{},{}\n",
                m.display(self.caps.analytic),
                format_rat(&c.re),
                format_rat(&c.im)
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let width = self
            .terms
            .keys()
            .map(|m| m.display(self.caps.analytic).len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&format!(
                "{:<width$}  {}\n",
                m.display(self.caps.analytic),
                c
            ));
        }
        out
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, o: &TruncSeries) -> TruncSeries {
        self.try_add(o).expect("series caps differ")
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, o: &TruncSeries) -> TruncSeries {
        self.try_sub(o).expect("series caps differ")
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, o: &TruncSeries) -> TruncSeries {
        self.try_mul(o).expect("series caps differ")
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        self.scale(&GaussRat::from_int(-1))
    }
}
