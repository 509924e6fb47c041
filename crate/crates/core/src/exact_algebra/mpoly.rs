use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Sparse multivariate polynomial with integer coefficients in a fixed number
/// of variables. Monomials are ordered lexicographically with variable 0 most
/// significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The single variable `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or requires non-integer coefficients.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let (dlead_exp, dlead_c) = divisor.leading()?;
        let dlead_exp = dlead_exp.clone();
        let dlead_c = dlead_c.clone();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((lexp, lc)) = rem.leading() {
            let mut shift = Vec::with_capacity(self.nvars);
            for (a, b) in lexp.iter().zip(&dlead_exp) {
                if a < b {
                    return None;
                }
                shift.push(a - b);
            }
            let (qc, r) = lc.div_rem(&dlead_c);
            if !r.is_zero() {
                return None;
            }
            let step = divisor.mul_monomial(&shift, &qc);
            quot.add_term(shift, qc);
            rem = &rem - &step;
        }
        Some(quot)
    }

    fn mul_monomial(&self, exps: &[u32], c: &BigInt) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let ne = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, v * c);
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// Keeps only terms whose exponent of `var` is at most `max_exp`.
    pub fn truncate_in(&self, var: usize, max_exp: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[var] <= max_exp)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            *out.terms.entry(e.clone()).or_insert_with(BigInt::zero) += c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            *out.terms.entry(e.clone()).or_insert_with(BigInt::zero) -= c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, v| !v.is_zero());
        MPoly {
            nvars: self.nvars,
            terms: out,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_round_trip() {
        let x = MPoly::var(3, 0);
        let y = MPoly::var(3, 1);
        let z = MPoly::var(3, 2);
        let a = &(&x + &y) - &z;
        let b = &(&x * &y) + &MPoly::one(3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!((&prod + &MPoly::one(3)).div_exact(&b), None);
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let x = MPoly::var(2, 0);
        assert!((&x - &x).is_zero());
        let mut p = MPoly::zero(2);
        p.add_term(vec![1, 0], BigInt::from(2));
        p.add_term(vec![1, 0], BigInt::from(-2));
        assert!(p.is_zero());
    }
}
