use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A subset of `[n−1]` as a bitmask, bit `i` for position `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Positions(u32);

impl Positions {
    pub fn empty() -> Self {
        Self(0)
    }

    /// Panics on position 0 or positions above 31.
    pub fn from_slice(positions: &[usize]) -> Self {
        let mut s = Self::empty();
        for &p in positions {
            s.insert(p);
        }
        s
    }

    /// All of `[m]`.
    pub fn interval(m: usize) -> Self {
        Self::from_slice(&(1..=m).collect::<Vec<_>>())
    }

    pub fn insert(&mut self, p: usize) {
        assert!((1..32).contains(&p), "position {p} out of range");
        self.0 |= 1 << p;
    }

    pub fn contains(self, p: usize) -> bool {
        p < 32 && self.0 & (1 << p) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..32).filter(move |&p| self.contains(p))
    }

    /// `Σ_{i ∈ S} i`.
    pub fn sum(self) -> usize {
        self.iter().sum()
    }

    pub fn max(self) -> Option<usize> {
        self.iter().last()
    }

    pub fn is_subset(self, other: Positions) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Positions) -> bool {
        self.0 & other.0 == 0
    }

    /// Every subset of `[n−1]`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = Positions> {
        let m = n.saturating_sub(1);
        (0u32..(1 << m)).map(|bits| Positions(bits << 1))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for Positions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

impl Serialize for Positions {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

/// Checks that `sigma` is a permutation of `1..=n` in one-line notation.
pub fn validate_permutation(sigma: &[u32]) -> Result<()> {
    let n = sigma.len();
    let mut seen = vec![false; n + 1];
    for &v in sigma {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return Err(Error::invalid(
                "permutation",
                format!("{sigma:?} is not a permutation of 1..={n}"),
            ));
        }
        seen[v] = true;
    }
    Ok(())
}

pub fn inverse(sigma: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

/// Positions `i` with `σ(i) − σ(i+1) ≥ gap`.
pub fn drops(sigma: &[u32], gap: i64) -> Positions {
    let mut s = Positions::empty();
    for i in 1..sigma.len() {
        if sigma[i - 1] as i64 - sigma[i] as i64 >= gap {
            s.insert(i);
        }
    }
    s
}

/// Positions `i` with `σ(i+1) − σ(i) ≥ gap`.
pub fn rises(sigma: &[u32], gap: i64) -> Positions {
    let mut s = Positions::empty();
    for i in 1..sigma.len() {
        if sigma[i] as i64 - sigma[i - 1] as i64 >= gap {
            s.insert(i);
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermStats {
    pub des: usize,
    /// `des + [σ(n) > σ(1)]`.
    pub cdes: usize,
    pub exc: usize,
    /// Sum of descent positions.
    pub maj: usize,
    /// Sum of `Des≥2(σ)`.
    pub maj2des: usize,
    /// Sum of `Asc≥2(σ)`.
    pub maj2asc: usize,
    pub des_set: Positions,
    pub des2_set: Positions,
    pub asc2_set: Positions,
}

/// Statistics of `σ` itself; apply to `inverse(σ)` for the inverse-indexed ones.
pub fn perm_stats(sigma: &[u32]) -> PermStats {
    let n = sigma.len();
    let des_set = drops(sigma, 1);
    let des2_set = drops(sigma, 2);
    let asc2_set = rises(sigma, 2);
    let des = des_set.len();
    PermStats {
        des,
        cdes: des + usize::from(n > 0 && sigma[n - 1] > sigma[0]),
        exc: sigma
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize > i + 1)
            .count(),
        maj: des_set.sum(),
        maj2des: des2_set.sum(),
        maj2asc: asc2_set.sum(),
        des_set,
        des2_set,
        asc2_set,
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (1..=n as u32).permutations(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = perm_stats(&[2, 3, 1]);
        assert_eq!((s.exc, s.maj), (2, 2));
        assert_eq!(inverse(&[2, 3, 1]), vec![3, 1, 2]);
        assert_eq!(perm_stats(&[3, 1, 2]).des2_set, Positions::from_slice(&[1]));

        let id = perm_stats(&[1, 2, 3, 4]);
        assert_eq!((id.des, id.cdes, id.exc, id.maj), (0, 1, 0, 0));

        let s = perm_stats(&[3, 2, 1]);
        assert_eq!((s.maj, s.exc), (3, 1));
    }

    #[test]
    fn singleton_has_no_cyclic_descent() {
        assert_eq!(perm_stats(&[1]).cdes, 0);
    }

    #[test]
    fn set_relations() {
        for n in 1..=6 {
            for sigma in permutations(n) {
                let s = perm_stats(&sigma);
                assert!(s.des2_set.is_subset(s.des_set));
                assert!(s.asc2_set.is_disjoint(s.des_set));
                assert_eq!(inverse(&inverse(&sigma)), sigma);
            }
        }
    }

    #[test]
    fn validation() {
        assert!(validate_permutation(&[2, 3, 1]).is_ok());
        assert!(validate_permutation(&[2, 2, 1]).is_err());
        assert!(validate_permutation(&[0, 1]).is_err());
    }

    #[test]
    fn subsets_enumerated() {
        assert_eq!(
            Positions::all_subsets(1).collect::<Vec<_>>(),
            vec![Positions::empty()]
        );
        assert_eq!(Positions::all_subsets(4).count(), 8);
        assert!(Positions::all_subsets(4).all(|s| s.max().is_none_or(|m| m <= 3)));
        assert_eq!(Positions::from_slice(&[1, 3]).to_string(), "{1,3}");
    }
}
