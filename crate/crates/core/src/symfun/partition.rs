use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// Integer partition `λ_1 ≥ λ_2 ≥ … ≥ λ_l ≥ 1`.
///
/// Ordered reverse-lexicographically, so `(4) < (3,1) < (2,2) < (2,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition", "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", "parts must be weakly decreasing"));
        }
        Ok(Self(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// `(j, j, …, j)` with `k` parts.
    pub fn rectangle(j: u32, k: usize) -> Self {
        Self::from_unsorted(vec![j; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities `(part, m_part)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, m) in self.multiplicities() {
            for j in 1..=m {
                z *= BigInt::from(part) * BigInt::from(j);
            }
        }
        z
    }

    /// `ε_λ = (-1)^{|λ| - l(λ)}`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Multiset union of parts, the index of a product in a multiplicative basis.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    pub fn smallest_part(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Exponent vector padded with zeros to `k` entries; `None` if too long.
    pub fn padded(&self, k: usize) -> Option<Vec<u8>> {
        if self.len() > k {
            return None;
        }
        let mut v: Vec<u8> = self.0.iter().map(|&p| p as u8).collect();
        v.resize(k, 0);
        Some(v)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n as u32, n as u32, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn reverse_lex_order() {
        let got = partitions_of(4);
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(sorted, want);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1, 1]).z(), BigInt::from(24));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[3, 3]).z(), BigInt::from(18));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }

    #[test]
    fn z_sums_to_one_over_class_sizes() {
        // Σ_λ 1/z_λ = 1: class sizes n!/z_λ sum to n!.
        for n in 1..=8usize {
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            let total: BigInt = partitions_of(n).iter().map(|l| &fact / l.z()).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugate_and_sign() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[3]).sign(), 1);
        assert_eq!(p(&[2]).sign(), -1);
    }
}
