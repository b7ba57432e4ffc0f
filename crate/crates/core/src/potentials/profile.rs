//! Winding profiles and fixed-locus descriptors.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::rat::factorial;

/// Multiset of positive winding degrees, stored in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WindingProfile {
    parts: Vec<u32>,
}

impl WindingProfile {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p >= 1),
            "winding degrees must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        WindingProfile { parts }
    }

    pub fn empty() -> Self {
        WindingProfile::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Product of factorials of the multiplicities.
    pub fn aut(&self) -> BigInt {
        let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_default() += 1;
        }
        mult.values().map(|&m| factorial(m)).product()
    }

    /// All profiles with parts `≤ max_part` and `min_len ≤ len ≤ max_len`.
    pub fn enumerate(max_part: u32, min_len: usize, max_len: usize) -> Vec<WindingProfile> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            max_part: u32,
            min_len: usize,
            max_len: usize,
            cur: &mut Vec<u32>,
            out: &mut Vec<WindingProfile>,
        ) {
            if cur.len() >= min_len {
                out.push(WindingProfile { parts: cur.clone() });
            }
            if cur.len() == max_len {
                return;
            }
            let top = cur.last().copied().unwrap_or(max_part);
            for p in 1..=top {
                cur.push(p);
                rec(max_part, min_len, max_len, cur, out);
                cur.pop();
            }
        }
        rec(max_part, min_len, max_len, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Profiles whose parts sum to at most `max_total`.
    pub fn enumerate_by_total(max_total: u32) -> Vec<WindingProfile> {
        Self::enumerate(max_total, 0, max_total as usize)
            .into_iter()
            .filter(|p| p.total() <= max_total as u64)
            .collect()
    }
}

impl std::fmt::Display for WindingProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A fixed locus of the resolution open moduli: covers of the compact line of degrees
/// `kparts`, disks glued at the top vertex, disks glued at the bottom vertex, or the lone
/// bottom disk `Γ′`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionLocus {
    pub kparts: WindingProfile,
    pub top: WindingProfile,
    pub bottom: WindingProfile,
    pub is_gamma_prime: bool,
}

impl ResolutionLocus {
    pub fn new(kparts: WindingProfile, top: WindingProfile, bottom: WindingProfile) -> Self {
        ResolutionLocus {
            kparts,
            top,
            bottom,
            is_gamma_prime: false,
        }
    }

    pub fn gamma_prime(d: u32) -> Self {
        ResolutionLocus {
            kparts: WindingProfile::empty(),
            top: WindingProfile::empty(),
            bottom: WindingProfile::new(vec![d]),
            is_gamma_prime: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.kparts.is_empty() && self.top.is_empty() && self.bottom.is_empty()
    }

    /// Total degree along the compact line, the exponent of `q e^x`.
    pub fn q_degree(&self) -> u64 {
        if self.is_gamma_prime {
            0
        } else {
            self.kparts.total() + self.bottom.total()
        }
    }

    /// Every locus with winding `≤ max_winding`, at most `max_boundary` disks and
    /// `q`-degree `≤ max_q`, the nonempty ones only.
    pub fn enumerate(max_winding: u32, max_boundary: usize, max_q: u32) -> Vec<ResolutionLocus> {
        let mut out = Vec::new();
        let disks = WindingProfile::enumerate(max_winding, 0, max_boundary);
        for k in WindingProfile::enumerate_by_total(max_q) {
            for top in &disks {
                for bottom in &disks {
                    if top.len() + bottom.len() > max_boundary
                        || k.total() + bottom.total() > max_q as u64
                        || (k.is_empty() && top.is_empty() && bottom.is_empty())
                    {
                        continue;
                    }
                    out.push(ResolutionLocus::new(k.clone(), top.clone(), bottom.clone()));
                }
            }
        }
        if max_boundary >= 1 {
            for d in 1..=max_winding {
                out.push(ResolutionLocus::gamma_prime(d));
            }
        }
        out
    }
}

/// `m` twisted insertions on a contracted component carrying the disks of `profile`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbifoldLocus {
    pub m: u32,
    pub profile: WindingProfile,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aut_orders() {
        assert_eq!(WindingProfile::new(vec![1, 2, 1]).aut(), BigInt::from(2));
        assert_eq!(
            WindingProfile::new(vec![1, 1, 1, 2, 2]).aut(),
            BigInt::from(12)
        );
        assert_eq!(WindingProfile::empty().aut(), BigInt::from(1));
        assert_eq!(WindingProfile::new(vec![1, 3, 2]).parts(), &[3, 2, 1]);
    }

    #[test]
    fn enumeration_counts() {
        // multisets of size ≤ 2 from {1,2,3}: 1 + 3 + 6
        assert_eq!(WindingProfile::enumerate(3, 0, 2).len(), 10);
        assert_eq!(
            WindingProfile::enumerate_by_total(4).len(),
            1 + 1 + 2 + 3 + 5
        );
    }
}
