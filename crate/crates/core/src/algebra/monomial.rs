//! Variables and monomials.

use std::fmt;

use crate::error::{Error, Result};

/// Which family a winding variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `y^(t)`
    Top,
    /// `y^(b)`
    Bottom,
    /// `ỹ^(t)`
    TopTilde,
    /// `ỹ^(b)`
    BottomTilde,
    /// `w`
    Orbifold,
    /// `w̃`
    OrbifoldTilde,
}

impl Side {
    pub const ALL: [Side; 6] = [
        Side::Top,
        Side::Bottom,
        Side::TopTilde,
        Side::BottomTilde,
        Side::Orbifold,
        Side::OrbifoldTilde,
    ];

    pub fn prefix(self) -> &'static str {
        match self {
            Side::Top => "yt",
            Side::Bottom => "yb",
            Side::TopTilde => "yt~",
            Side::BottomTilde => "yb~",
            Side::Orbifold => "w",
            Side::OrbifoldTilde => "w~",
        }
    }
}

/// Degree-tracking variables. `Q` stands for the combination `q e^x` (or `Q e^X`),
/// `U` for `U e^Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeVar {
    Q,
    P,
    U,
    W,
}

impl DegreeVar {
    pub const ALL: [DegreeVar; 4] = [DegreeVar::Q, DegreeVar::P, DegreeVar::U, DegreeVar::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            DegreeVar::Q => "q",
            DegreeVar::P => "P",
            DegreeVar::U => "U",
            DegreeVar::W => "W",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Analytic,
    Winding(Side, u32),
    Degree(DegreeVar),
}

impl VarId {
    pub fn winding(side: Side, d: u32) -> Self {
        assert!(d >= 1, "winding degree must be positive");
        VarId::Winding(side, d)
    }

    pub fn name(&self, analytic: &str) -> String {
        match self {
            VarId::Analytic => analytic.to_string(),
            VarId::Winding(s, d) => format!("{}{}", s.prefix(), d),
            VarId::Degree(v) => v.name().to_string(),
        }
    }

    pub fn parse(s: &str, analytic: &str) -> Result<Self> {
        if s == analytic {
            return Ok(VarId::Analytic);
        }
        for v in DegreeVar::ALL {
            if s == v.name() {
                return Ok(VarId::Degree(v));
            }
        }
        // longest prefixes first so "yt~" wins over "yt"
        for side in [
            Side::TopTilde,
            Side::BottomTilde,
            Side::OrbifoldTilde,
            Side::Top,
            Side::Bottom,
            Side::Orbifold,
        ] {
            if let Some(rest) = s.strip_prefix(side.prefix()) {
                if let Ok(d) = rest.parse::<u32>() {
                    if d >= 1 {
                        return Ok(VarId::Winding(side, d));
                    }
                }
            }
        }
        Err(Error::Parse(format!("unknown variable {s:?}")))
    }
}

/// Sorted list of (variable, positive exponent).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        pairs
            .into_iter()
            .fold(Monomial::one(), |m, (v, e)| m.mul(&Monomial::var_pow(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn exp(&self, v: VarId) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn analytic(&self) -> u32 {
        self.exp(VarId::Analytic)
    }

    pub fn degree(&self, v: DegreeVar) -> u32 {
        self.exp(VarId::Degree(v))
    }

    /// Total exponent of winding variables, i.e. the number of boundary components.
    pub fn boundary(&self) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| matches!(v, VarId::Winding(..)))
            .map(|(_, e)| e)
            .sum()
    }

    pub fn max_winding(&self) -> u32 {
        self.0
            .iter()
            .filter_map(|(v, _)| match v {
                VarId::Winding(_, d) => Some(*d),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            let (a, b) = (self.0[i], o.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&o.0[j..]);
        Monomial(out)
    }

    /// Exponent of `v` changed by `delta`; `None` if it would go negative.
    pub fn shift(&self, v: VarId, delta: i64) -> Option<Monomial> {
        let e = self.exp(v) as i64 + delta;
        if e < 0 {
            return None;
        }
        let mut out: Vec<_> = self.0.iter().copied().filter(|(w, _)| *w != v).collect();
        if e > 0 {
            out.push((v, e as u32));
            out.sort();
        }
        Some(Monomial(out))
    }

    /// Splits into the part whose variables satisfy `keep` and the rest.
    pub fn split(&self, keep: impl Fn(&VarId) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| keep(v));
        (Monomial(a), Monomial(b))
    }

    pub fn display(&self, analytic: &str) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.name(analytic)
                } else {
                    format!("{}^{}", v.name(analytic), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_merges_exponents() {
        let a = Monomial::from_pairs([(VarId::Analytic, 2), (VarId::Degree(DegreeVar::Q), 1)]);
        let b = Monomial::from_pairs([(VarId::winding(Side::Top, 3), 1), (VarId::Analytic, 1)]);
        let m = a.mul(&b);
        assert_eq!(m.analytic(), 3);
        assert_eq!(m.boundary(), 1);
        assert_eq!(m.max_winding(), 3);
        assert_eq!(m.degree(DegreeVar::Q), 1);
        assert_eq!(m, b.mul(&a));
    }

    #[test]
    fn names_round_trip() {
        for v in [
            VarId::Analytic,
            VarId::winding(Side::TopTilde, 2),
            VarId::winding(Side::Orbifold, 11),
            VarId::winding(Side::OrbifoldTilde, 1),
            VarId::Degree(DegreeVar::W),
        ] {
            assert_eq!(VarId::parse(&v.name("z"), "z").unwrap(), v);
        }
        assert!(VarId::parse("yt0", "z").is_err());
    }

    #[test]
    fn shift_and_split() {
        let q = VarId::Degree(DegreeVar::Q);
        let m = Monomial::from_pairs([(q, 2), (VarId::winding(Side::Bottom, 1), 1)]);
        assert_eq!(m.shift(q, -2).unwrap().exp(q), 0);
        assert!(m.shift(q, -3).is_none());
        let (w, rest) = m.split(|v| matches!(v, VarId::Winding(..)));
        assert_eq!(w.boundary(), 1);
        assert_eq!(rest.exp(q), 2);
    }
}
