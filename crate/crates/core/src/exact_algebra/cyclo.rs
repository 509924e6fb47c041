use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{LaurentPoly, QtPoly};

/// The `k`-th cyclotomic polynomial `Φ_k(q)`.
///
/// Built by dividing `q^k - 1` exactly by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic(k: u32) -> QtPoly {
    assert!(k >= 1, "cyclotomic order must be positive");
    let mut value = &QtPoly::q_power(k) - &QtPoly::one();
    for d in (1..k).filter(|d| k.is_multiple_of(*d)) {
        value = value
            .div_exact_monic(&cyclotomic(d))
            .expect("q^k - 1 is divisible by every Φ_d with d | k");
    }
    value
}

/// Degree of `Φ_k`, i.e. Euler's totient of `k`.
pub fn cyclotomic_degree(k: u32) -> usize {
    (1..=k).filter(|&j| num_integer::gcd(j, k) == 1).count()
}

/// A class in `Q(t)[q] / Φ_k(q)`, i.e. an exact value at a primitive `k`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElem {
    order: u32,
    residue: Vec<LaurentPoly>,
}

impl CycloElem {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            residue: vec![LaurentPoly::zero(); cyclotomic_degree(order)],
        }
    }

    /// Reduces `f` modulo `Φ_k`.
    pub fn from_qt(f: &QtPoly, order: u32) -> Self {
        let phi = cyclotomic(order);
        let (_, rem) = f.div_rem_monic(&phi);
        let mut residue = vec![LaurentPoly::zero(); cyclotomic_degree(order)];
        for (e, c) in rem.terms() {
            residue[e as usize] = c.clone();
        }
        Self { order, residue }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of `1, ξ, ξ², …` in the reduced representative.
    pub fn residue(&self) -> &[LaurentPoly] {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.iter().all(LaurentPoly::is_zero)
    }

    /// True when the residue has no `q`-dependence.
    pub fn is_t_polynomial(&self) -> bool {
        self.residue.iter().skip(1).all(LaurentPoly::is_zero)
    }

    /// The pure `t` value, when [`Self::is_t_polynomial`] holds.
    pub fn to_t_polynomial(&self) -> Option<LaurentPoly> {
        self.is_t_polynomial()
            .then(|| self.residue.first().cloned().unwrap_or_default())
    }

    fn to_qt(&self) -> QtPoly {
        let mut p = QtPoly::zero();
        for (e, c) in self.residue.iter().enumerate() {
            p.add_term(e as u32, c.clone());
        }
        p
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_t_polynomial() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "{} mod Φ_{}", self.to_qt(), self.order),
        }
    }
}

impl Add<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.order, rhs.order, "mismatched cyclotomic orders");
        CycloElem {
            order: self.order,
            residue: self
                .residue
                .iter()
                .zip(&rhs.residue)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.order, rhs.order, "mismatched cyclotomic orders");
        CycloElem {
            order: self.order,
            residue: self
                .residue
                .iter()
                .zip(&rhs.residue)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.order, rhs.order, "mismatched cyclotomic orders");
        CycloElem::from_qt(&(&self.to_qt() * &rhs.to_qt()), self.order)
    }
}

/// Exact value of `f(ξ_k)` for a primitive `k`-th root of unity `ξ_k`.
pub fn eval_at_root_of_unity(f: &QtPoly, k: u32) -> CycloElem {
    CycloElem::from_qt(f, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), QtPoly::from_q_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), QtPoly::from_q_ints(&[1, 1]));
        assert_eq!(cyclotomic(3), QtPoly::from_q_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), QtPoly::from_q_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), QtPoly::from_q_ints(&[1, -1, 1]));
    }

    #[test]
    fn degrees_sum_over_divisors() {
        for n in 1..=12u32 {
            let total: usize = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| cyclotomic(d).q_degree().unwrap() as usize)
                .sum();
            assert_eq!(total, n as usize);
            assert_eq!(cyclotomic(n).q_degree().unwrap() as usize, cyclotomic_degree(n));
        }
    }

    #[test]
    fn evaluation_examples() {
        let f = QtPoly::from_q_ints(&[1, 1, 1]);
        assert!(eval_at_root_of_unity(&f, 3).is_zero());

        let t = QtPoly::constant(LaurentPoly::t());
        for k in 1..=6 {
            assert_eq!(
                eval_at_root_of_unity(&t, k).to_t_polynomial(),
                Some(LaurentPoly::t())
            );
        }

        let q2 = QtPoly::q_power(2);
        assert_eq!(
            eval_at_root_of_unity(&q2, 2).to_t_polynomial(),
            Some(LaurentPoly::one())
        );
        // ξ_4 = i: q^2 -> -1, q -> not a t-polynomial
        assert_eq!(
            eval_at_root_of_unity(&q2, 4).to_t_polynomial(),
            Some(LaurentPoly::from_int(-1))
        );
        assert!(!eval_at_root_of_unity(&QtPoly::q_power(1), 4).is_t_polynomial());
    }
}
