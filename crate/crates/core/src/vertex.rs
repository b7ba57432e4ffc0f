//! Local pieces: disk functions, multiple-cover edges, gluing factors, and the `G` series.

use num_traits::{One, Zero};

use crate::algebra::rat::{
    big, binomial, catalan, double_factorial_ratio, factorial, int, pow, sign, Rat,
};
use crate::algebra::series::{Caps, TruncSeries};
use crate::algebra::GaussRat;
use crate::error::{Error, Result};

/// A compact edge with normal bundle `O(-k) + O(k-2)` and torus weights `a` (along the
/// edge) and `b` (transverse, on the `O(-k)` side at the left vertex). The flags record
/// whether the Lagrangian at that end is oriented against the standard arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeGeom {
    pub a: Rat,
    pub b: Rat,
    pub k: u32,
    pub orient_left: bool,
    pub orient_right: bool,
}

impl EdgeGeom {
    pub fn new(a: Rat, b: Rat, k: u32) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroWeight);
        }
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        Ok(EdgeGeom {
            a,
            b,
            k,
            orient_left: false,
            orient_right: false,
        })
    }

    pub fn with_orientation(mut self, left: bool, right: bool) -> Self {
        self.orient_left = left;
        self.orient_right = right;
        self
    }

    pub fn same_orientation(&self) -> bool {
        self.orient_left == self.orient_right
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexSide {
    Left,
    Right,
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidArgument("winding must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `∏_{i=1}^{d-1} (bd - ai)`
fn left_product(g: &EdgeGeom, d: u32) -> Rat {
    let bd = &g.b * int(d as i64);
    (1..d as i64).fold(Rat::one(), |acc, i| acc * (&bd - &g.a * int(i)))
}

/// `∏_{i=1}^{d-1} (bd - akd + ai)`
fn right_product(g: &EdgeGeom, d: u32) -> Rat {
    let base = &g.b * int(d as i64) - &g.a * int((g.k * d) as i64);
    (1..d as i64).fold(Rat::one(), |acc, i| acc * (&base + &g.a * int(i)))
}

pub fn disk_smooth(geom: &EdgeGeom, side: VertexSide, d: u32) -> Result<Rat> {
    check_d(d)?;
    if geom.a.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let d64 = d as i64;
    let den = pow(&geom.a, d64 - 1) * int(d64) * big(&factorial(d as u64));
    let (value, flipped) = match side {
        VertexSide::Left => (
            sign(d64 + 1) * left_product(geom, d) / den,
            geom.orient_left,
        ),
        VertexSide::Right => (right_product(geom, d) / den, geom.orient_right),
    };
    Ok(if flipped {
        value * sign(d64 + 1)
    } else {
        value
    })
}

/// Degree `d` cover of the compact edge, closed product form.
pub fn edge_cover(geom: &EdgeGeom, d: u32) -> Result<Rat> {
    check_d(d)?;
    if geom.a.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let d64 = d as i64;
    let f = big(&factorial(d as u64));
    let den = pow(&geom.a, 2 * d64 - 2) * int(d64) * &f * &f;
    Ok(sign(d64 * (geom.k as i64 + 1)) * left_product(geom, d) * right_product(geom, d) / den)
}

/// Degree `d` cover computed directly from the localization weights of `H^0` and `H^1` of
/// the pulled back normal bundle. Fails when a weight in the denominator vanishes.
pub fn edge_cover_localization(geom: &EdgeGeom, d: u32) -> Result<Rat> {
    check_d(d)?;
    if geom.a.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let (a, b, k) = (&geom.a, &geom.b, geom.k as i64);
    let d64 = d as i64;
    let dr = int(d64);
    let mut h1 = Rat::one();
    let mut h0 = Rat::one();
    // O(-k), weight -b at the left vertex
    for j in 1..d64 * k {
        h1 *= (-(b * &dr) + a * int(j)) / &dr;
    }
    // O(k-2), weight b-a at the left vertex
    let c = b - a;
    if k >= 2 {
        for j in 0..=d64 * (k - 2) {
            h0 *= (&c * &dr - a * int(j)) / &dr;
        }
    } else {
        for j in 1..d64 {
            h1 *= (&c * &dr + a * int(j)) / &dr;
        }
    }
    if h0.is_zero() {
        return Err(Error::InvalidArgument("degenerate weights".into()));
    }
    let f = big(&factorial(d as u64));
    let tangent = sign(d64 + 1) * pow(&(a / &dr), 2 * d64 - 2) * &f * &f;
    Ok(h1 / h0 / tangent / dr)
}

/// `(-1)^{dk+1} d` for equally oriented ends, `(-1)^{dk+d} d` otherwise.
pub fn glue_factor_smooth(d: u32, k: u32, same_orientation: bool) -> Rat {
    let (d, k) = (d as i64, k as i64);
    if same_orientation {
        sign(d * k + 1) * int(d)
    } else {
        sign(d * k + d) * int(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbDiskKind {
    /// Origin marked by a twisted point.
    Twisted,
    /// Origin unmarked.
    Untwisted,
}

impl OrbDiskKind {
    pub const BOTH: [OrbDiskKind; 2] = [OrbDiskKind::Twisted, OrbDiskKind::Untwisted];
}

pub fn disk_orbifold(d: u32, kind: OrbDiskKind) -> Result<Rat> {
    check_d(d)?;
    let d = d as i64;
    Ok(match kind {
        OrbDiskKind::Twisted => double_factorial_ratio(d as u64) / int(2 * d),
        OrbDiskKind::Untwisted => Rat::new(1.into(), (2 * d * d).into()),
    })
}

pub fn orb_edge_cover(d: u32, kind: OrbDiskKind) -> Result<Rat> {
    check_d(d)?;
    let d = d as i64;
    Ok(match kind {
        OrbDiskKind::Twisted => {
            let r = double_factorial_ratio(d as u64);
            &r * &r / int(2 * d)
        }
        OrbDiskKind::Untwisted => Rat::new(1.into(), (2 * d * d * d).into()),
    })
}

/// `(-1)^d 2d`
pub fn orb_glue_factor(d: u32) -> Rat {
    sign(d as i64) * int(2 * d as i64)
}

/// Coefficients `X^0..=X^upto` of `G^n`, `G = (1 + sqrt(1 + 4X))/2`, via `G^n = G^{n-1} + X G^{n-2}`.
pub fn g_power_coefficients(n: u32, upto: usize) -> Vec<Rat> {
    let g0: Vec<Rat> = (0..=upto)
        .map(|k| if k == 0 { Rat::one() } else { Rat::zero() })
        .collect();
    let g1: Vec<Rat> = (0..=upto)
        .map(|k| {
            if k == 0 {
                Rat::one()
            } else {
                sign(k as i64 + 1) * big(&catalan(k as u64 - 1))
            }
        })
        .collect();
    if n == 0 {
        return g0;
    }
    let (mut prev, mut cur) = (g0, g1);
    for _ in 1..n {
        let next: Vec<Rat> = (0..=upto)
            .map(|k| {
                if k == 0 {
                    cur[0].clone()
                } else {
                    &cur[k] + &prev[k - 1]
                }
            })
            .collect();
        prev = cur;
        cur = next;
    }
    cur
}

/// `[X^k] G^{2(d+k)}`
pub fn g_lemma_coefficient(d: u32, k: u32) -> Result<Rat> {
    match (d, k) {
        (0, 0) => Err(Error::InvalidArgument("d and k cannot both vanish".into())),
        (0, _) => Ok(int(2)),
        _ => Ok(
            big(&binomial((k + 2 * d - 1) as u64, (2 * d - 1) as u64)) * int((d + k) as i64)
                / int(d as i64),
        ),
    }
}

/// `G` as a series in the analytic variable `X`.
pub fn g_series(order: u32) -> TruncSeries {
    let caps = Caps::analytic(order, "X");
    TruncSeries::from_analytic(
        &caps,
        g_power_coefficients(1, order.saturating_sub(1) as usize)
            .into_iter()
            .map(GaussRat::real),
    )
}

/// `F(X, n) = exp(n Σ_κ ((-1)^{κ+1}/κ) binom(2κ-1, κ) X^κ)`
pub fn f_specialized(n: i64, order: u32) -> TruncSeries {
    let caps = Caps::analytic(order, "X");
    let inner = TruncSeries::from_analytic(
        &caps,
        (0..order as i64).map(|k| {
            if k == 0 {
                GaussRat::zero()
            } else {
                GaussRat::real(
                    sign(k + 1) * big(&binomial(2 * k as u64 - 1, k as u64)) / int(k) * int(n),
                )
            }
        }),
    );
    inner.exp().expect("zero constant term")
}

/// Coefficients of `x^0..x^9` in `G^1..G^10`.
pub const G_POWER_TABLE: [[i64; 10]; 10] = [
    [1, 1, -1, 2, -5, 14, -42, 132, -429, 1430],
    [1, 2, -1, 2, -5, 14, -42, 132, -429, 1430],
    [1, 3, 0, 1, -3, 9, -28, 90, -297, 1001],
    [1, 4, 2, 0, -1, 4, -14, 48, -165, 572],
    [1, 5, 5, 0, 0, 1, -5, 20, -75, 275],
    [1, 6, 9, 2, 0, 0, -1, 6, -27, 110],
    [1, 7, 14, 7, 0, 0, 0, 1, -7, 35],
    [1, 8, 20, 16, 2, 0, 0, 0, -1, 8],
    [1, 9, 27, 30, 9, 0, 0, 0, 0, 1],
    [1, 10, 35, 50, 25, 2, 0, 0, 0, 0],
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn geom(a: i64, b: i64, k: u32) -> EdgeGeom {
        EdgeGeom::new(int(a), int(b), k).unwrap()
    }

    #[test]
    fn disks() {
        assert_eq!(
            disk_smooth(&geom(3, 7, 1), VertexSide::Left, 1).unwrap(),
            int(1)
        );
        assert_eq!(
            disk_smooth(&geom(1, 5, 1), VertexSide::Left, 3).unwrap(),
            rat(91, 9)
        );
        assert_eq!(
            disk_smooth(&geom(1, 3, 1), VertexSide::Left, 2).unwrap(),
            rat(-5, 4)
        );
        assert_eq!(
            disk_smooth(&geom(1, 3, 1), VertexSide::Right, 2).unwrap(),
            rat(5, 4)
        );
        assert!(EdgeGeom::new(int(0), int(1), 1).is_err());
    }

    #[test]
    fn covers() {
        for k in 1..5 {
            assert_eq!(edge_cover(&geom(2, 5, k), 1).unwrap(), sign(k as i64 + 1));
        }
        assert_eq!(edge_cover(&geom(1, 3, 1), 2).unwrap(), rat(25, 8));
        assert_eq!(edge_cover(&geom(1, 3, 2), 2).unwrap(), rat(15, 8));
        assert_eq!(
            edge_cover_localization(&geom(1, 3, 2), 2).unwrap(),
            rat(15, 8)
        );
        assert_eq!(
            edge_cover_localization(&geom(1, 3, 1), 2).unwrap(),
            rat(25, 8)
        );
    }

    #[test]
    fn glue_factors() {
        assert_eq!(glue_factor_smooth(2, 1, true), int(-2));
        assert_eq!(glue_factor_smooth(1, 1, true), int(1));
        assert_eq!(glue_factor_smooth(3, 2, true), int(-3));
        let g = geom(1, 3, 1);
        let lhs = disk_smooth(&g, VertexSide::Left, 2).unwrap()
            * glue_factor_smooth(2, 1, true)
            * disk_smooth(&g, VertexSide::Right, 2).unwrap();
        assert_eq!(lhs, rat(25, 8));
    }

    #[test]
    fn orbifold_pieces() {
        assert_eq!(disk_orbifold(1, OrbDiskKind::Twisted).unwrap(), rat(1, 4));
        assert_eq!(disk_orbifold(2, OrbDiskKind::Twisted).unwrap(), rat(3, 32));
        assert_eq!(disk_orbifold(2, OrbDiskKind::Untwisted).unwrap(), rat(1, 8));
        assert_eq!(orb_edge_cover(1, OrbDiskKind::Twisted).unwrap(), rat(1, 8));
        assert_eq!(
            orb_edge_cover(2, OrbDiskKind::Twisted).unwrap(),
            rat(9, 256)
        );
        assert_eq!(
            orb_edge_cover(1, OrbDiskKind::Untwisted).unwrap(),
            rat(1, 2)
        );
        assert_eq!(orb_glue_factor(1), int(-2));
        assert_eq!(orb_glue_factor(2), int(4));
    }

    #[test]
    fn g_rows() {
        assert_eq!(
            g_power_coefficients(3, 9),
            G_POWER_TABLE[2].iter().map(|&v| int(v)).collect::<Vec<_>>()
        );
        assert_eq!(g_power_coefficients(5, 9)[5], int(1));
        assert_eq!(g_lemma_coefficient(1, 1).unwrap(), int(4));
        assert_eq!(g_lemma_coefficient(0, 2).unwrap(), int(2));
        assert_eq!(g_lemma_coefficient(2, 1).unwrap(), int(6));
        assert!(g_lemma_coefficient(0, 0).is_err());
    }

    #[test]
    fn g_quadratic() {
        let g = g_series(12);
        let x = TruncSeries::var(g.caps(), crate::algebra::VarId::Analytic);
        assert!((&(&(&g * &g) - &g) - &x).is_zero());
        for n in 0..6 {
            assert_eq!(f_specialized(n, 12), g.pow(n as u32));
        }
    }
}
