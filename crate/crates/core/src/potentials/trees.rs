//! Bipartite localization trees for the closed two-vertex geometries.

use std::collections::{BTreeSet, HashSet};

use num_traits::One;

use super::orbifold::orbifold_vertex_series;
use super::profile::WindingProfile;
use super::resolution::{a_d_rational, kappa, multi_boundary_rational, one_boundary_coeff};
use crate::algebra::poly::RationalQ;
use crate::algebra::rat::{int, sign, Rat};
use crate::algebra::series::{Caps, TruncSeries};
use crate::algebra::{DegreeVar, GaussRat, Monomial, VarId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    fn code(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

/// Edge-labelled bicoloured tree. Edges are `(u, v, d)`.
#[derive(Clone, Debug)]
pub struct LocalizationTree {
    colors: Vec<Color>,
    edges: Vec<(usize, usize, u32)>,
    canonical: String,
}

impl PartialEq for LocalizationTree {
    fn eq(&self, o: &Self) -> bool {
        self.canonical == o.canonical
    }
}

impl Eq for LocalizationTree {}

impl LocalizationTree {
    pub fn new(colors: Vec<Color>, edges: Vec<(usize, usize, u32)>) -> Result<Self> {
        let n = colors.len();
        let bad = |s: &str| {
            Err(Error::InvalidArgument(format!(
                "not a localization tree: {s}"
            )))
        };
        if edges.is_empty() {
            return bad("no edges");
        }
        if edges.len() + 1 != n {
            return bad("edge count");
        }
        for &(u, v, d) in &edges {
            if u >= n || v >= n || d == 0 {
                return bad("edge endpoints or label");
            }
            if colors[u] == colors[v] {
                return bad("not bipartite");
            }
        }
        let mut t = LocalizationTree {
            colors,
            edges,
            canonical: String::new(),
        };
        // n-1 edges and connected means acyclic
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(t.neighbours(v).into_iter().map(|(w, _, _)| w));
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("disconnected");
        }
        t.canonical = (0..n)
            .map(|r| t.encode(r, usize::MAX))
            .min()
            .expect("nonempty");
        Ok(t)
    }

    /// `(neighbour, edge index, label)` around `v`.
    fn neighbours(&self, v: usize) -> Vec<(usize, usize, u32)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, &(a, b, d))| {
                if a == v {
                    Some((b, i, d))
                } else if b == v {
                    Some((a, i, d))
                } else {
                    None
                }
            })
            .collect()
    }

    fn encode(&self, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = self
            .neighbours(v)
            .into_iter()
            .filter(|&(w, _, _)| w != parent)
            .map(|(w, _, d)| format!("{d}:{}", self.encode(w, v)))
            .collect();
        kids.sort();
        format!("{}({})", self.colors[v].code(), kids.join(","))
    }

    pub fn canonical(&self) -> &str {
        &self.canonical
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Edge indices at `v`, in increasing order.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        let mut e: Vec<usize> = self.neighbours(v).into_iter().map(|(_, i, _)| i).collect();
        e.sort_unstable();
        e
    }

    /// The single-edge tree.
    pub fn is_single_edge(&self) -> bool {
        self.edges.len() == 1
    }

    fn grow(&self, v: usize, d: u32) -> LocalizationTree {
        let mut colors = self.colors.clone();
        colors.push(self.colors[v].other());
        let mut edges = self.edges.clone();
        edges.push((v, colors.len() - 1, d));
        LocalizationTree::new(colors, edges).expect("adding a leaf keeps a tree")
    }
}

impl std::fmt::Display for LocalizationTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical)
    }
}

/// Isomorphism classes with label sum `≤ max_total`, labels `≤ max_edge_degree`.
pub fn enumerate_trees(max_total: u32, max_edge_degree: u32) -> Vec<LocalizationTree> {
    enumerate_trees_bounded(max_total, max_edge_degree, usize::MAX)
}

/// As [`enumerate_trees`], keeping at most `max_edges` edges.
pub fn enumerate_trees_bounded(
    max_total: u32,
    max_edge_degree: u32,
    max_edges: usize,
) -> Vec<LocalizationTree> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for d in 1..=max_edge_degree.min(max_total) {
        let t =
            LocalizationTree::new(vec![Color::Black, Color::White], vec![(0, 1, d)]).expect("edge");
        if seen.insert(t.canonical.clone()) {
            frontier.push(t);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for t in &frontier {
            if t.edges.len() < max_edges {
                for v in 0..t.vertex_count() {
                    for d in 1..=max_edge_degree {
                        if t.total_degree() + d > max_total {
                            break;
                        }
                        let g = t.grow(v, d);
                        if seen.insert(g.canonical.clone()) {
                            next.push(g);
                        }
                    }
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out.sort_by(|a, b| {
        (a.edges.len(), a.total_degree(), &a.canonical).cmp(&(
            b.edges.len(),
            b.total_degree(),
            &b.canonical,
        ))
    });
    out
}

/// `(P e^W)^D`
pub fn p_exp_w(d: u32, caps: &Caps) -> TruncSeries {
    let w = TruncSeries::var(caps, VarId::Degree(DegreeVar::W)).scale_rat(&int(d as i64));
    let e = w.exp().expect("zero constant");
    e.mul_monomial(
        &Monomial::var_pow(VarId::Degree(DegreeVar::P), d),
        &GaussRat::one(),
    )
}

fn labels_at(t: &LocalizationTree, v: usize) -> Vec<u32> {
    t.incident(v).into_iter().map(|e| t.edges[e].2).collect()
}

/// Orbifold vertex factor: literal coefficient of the product of the incident winding
/// variables, twisted part only at a leaf. White vertices carry `(-1)^{Σd}`.
pub fn orbifold_vertex_factor(t: &LocalizationTree, v: usize, order: u32) -> TruncSeries {
    let labels = labels_at(t, v);
    let profile = WindingProfile::new(labels.clone());
    let s = orbifold_vertex_series(&profile, order, labels.len() == 1);
    match t.colors[v] {
        Color::Black => s,
        Color::White => s.scale_rat(&sign(profile.total() as i64)),
    }
}

/// `GW_X(T)` as a series in `Z`, `P`, `W`.
pub fn closed_tree_contribution_orbifold(t: &LocalizationTree, caps: &Caps) -> TruncSeries {
    let mut acc = TruncSeries::one(caps);
    for v in 0..t.vertex_count() {
        acc = &acc * &orbifold_vertex_factor(t, v, caps.order).with_caps(caps);
    }
    let edge = t.edges.iter().fold(Rat::one(), |acc, &(_, _, d)| {
        acc * sign(d as i64) * int(2 * d as i64)
    });
    let d = t.total_degree();
    let mut s = &acc.scale_rat(&edge) * &p_exp_w(d, caps);
    if t.is_single_edge() {
        let extra = p_exp_w(d, caps).scale_rat(&Rat::new(1.into(), (2 * (d as i64).pow(3)).into()));
        s = &s + &extra;
    }
    s
}

/// Coefficient of `∏_{top} y^(t) ∏_{rest} y^(b)` in the resolution open potential, with the
/// disks treated as distinguishable. A leaf's bottom coefficient keeps the bare disk `1/d²`.
pub fn resolution_vertex_coefficient(labels: &[u32], top: &[bool]) -> RationalQ {
    if let [d] = labels {
        let d = *d;
        let c = GaussRat::real(one_boundary_coeff(d));
        let a = a_d_rational(d).scale(&c);
        return if top[0] {
            a.shift(-(d as i64)).expect("A_d starts at Q^d")
        } else {
            a.add(&RationalQ::constant(GaussRat::real(Rat::new(
                1.into(),
                ((d * d) as i64).into(),
            ))))
        };
    }
    let profile = WindingProfile::new(labels.to_vec());
    let shift: u32 = labels
        .iter()
        .zip(top)
        .filter(|(_, &t)| !t)
        .map(|(&d, _)| d)
        .sum();
    multi_boundary_rational(&profile)
        .scale(&GaussRat::real(kappa(&profile)))
        .shift(shift as i64)
        .expect("positive shift")
}

/// `GW_Y(T) = R(Q_) U_^D`, with `Q_ = Q e^X` and `U_ = U e^Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTreeTerm {
    pub coefficient: RationalQ,
    pub u_degree: u32,
}

impl ResolutionTreeTerm {
    /// Power series in `Q` and `U`.
    pub fn expand(&self, caps: &Caps) -> Result<TruncSeries> {
        let r = self.coefficient.expand(caps, DegreeVar::Q)?;
        Ok(r.mul_monomial(
            &Monomial::var_pow(VarId::Degree(DegreeVar::U), self.u_degree),
            &GaussRat::one(),
        ))
    }
}

/// Terms of the subset sum, one per `S` (bit `e` set when edge `e ∈ S`).
pub fn resolution_subset_terms(t: &LocalizationTree) -> Vec<(u32, RationalQ)> {
    let ne = t.edges.len();
    let edge = t
        .edges
        .iter()
        .fold(Rat::one(), |acc, &(_, _, d)| acc * int(-(d as i64)));
    let mut out = Vec::with_capacity(1 << ne);
    for mask in 0u32..(1 << ne) {
        let mut acc = RationalQ::constant(GaussRat::real(edge.clone()));
        for v in 0..t.vertex_count() {
            let inc = t.incident(v);
            let labels: Vec<u32> = inc.iter().map(|&e| t.edges[e].2).collect();
            // black: e ∈ S pairs with y^(t); white: e ∈ S pairs with ỹ^(t), the image of y^(b)
            let top: Vec<bool> = inc
                .iter()
                .map(|&e| {
                    let in_s = mask >> e & 1 == 1;
                    match t.colors[v] {
                        Color::Black => in_s,
                        Color::White => !in_s,
                    }
                })
                .collect();
            acc = acc.mul(&resolution_vertex_coefficient(&labels, &top));
        }
        out.push((mask, acc));
    }
    out
}

pub fn closed_tree_contribution_resolution(t: &LocalizationTree) -> ResolutionTreeTerm {
    let coefficient = resolution_subset_terms(t).into_iter().fold(
        RationalQ::constant(GaussRat::real(Rat::from_integer(0.into()))),
        |acc, (_, r)| acc.add(&r),
    );
    ResolutionTreeTerm {
        coefficient,
        u_degree: t.total_degree(),
    }
}

/// Degree sequence summary used in reports.
pub fn tree_labels(t: &LocalizationTree) -> BTreeSet<u32> {
    t.edges.iter().map(|e| e.2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_trees(1, 1).len(), 1);
        let t2 = enumerate_trees(2, 2);
        assert_eq!(t2.len(), 4);
        assert!(t2.iter().all(|t| t.edges().len() + 1 == t.vertex_count()));
    }

    #[test]
    fn rejects_non_trees() {
        use Color::*;
        assert!(LocalizationTree::new(vec![Black, Black], vec![(0, 1, 1)]).is_err());
        assert!(LocalizationTree::new(vec![Black, White, Black], vec![(0, 1, 1)]).is_err());
        assert!(LocalizationTree::new(vec![Black], vec![]).is_err());
    }

    #[test]
    fn canonical_forms_identify_relabellings() {
        use Color::*;
        let a =
            LocalizationTree::new(vec![Black, White, Black], vec![(0, 1, 1), (1, 2, 2)]).unwrap();
        let b =
            LocalizationTree::new(vec![White, Black, Black], vec![(0, 2, 1), (1, 0, 2)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_edge_orbifold_constant() {
        use Color::*;
        let caps = Caps::analytic(3, "Z")
            .with_degree(DegreeVar::P, 2)
            .with_degree(DegreeVar::W, 1);
        let t = LocalizationTree::new(vec![Black, White], vec![(0, 1, 1)]).unwrap();
        let s = closed_tree_contribution_orbifold(&t, &caps);
        assert_eq!(
            s.coeff(&Monomial::var(VarId::Degree(DegreeVar::P))).re,
            rat(1, 2)
        );
    }

    #[test]
    fn single_edge_resolution_degree_one() {
        use Color::*;
        let t = LocalizationTree::new(vec![Black, White], vec![(0, 1, 1)]).unwrap();
        let term = closed_tree_contribution_resolution(&t);
        // Q^0 U^1 coefficient: twice the degree-one cover of an O(-2)+O(0) edge
        assert_eq!(
            term.coefficient.eval(&GaussRat::from_int(0)).unwrap(),
            GaussRat::from_int(-2)
        );
    }
}
