use crate::exact_algebra::LaurentPoly;
use crate::{Error, Result};

use super::{Basis, SymFun};

/// Truncated series `Σ_{n=0}^{N} f_n z^n` with `f_n` homogeneous of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeries {
    basis: Basis,
    coeffs: Vec<SymFun>,
}

impl SymSeries {
    pub fn zero(basis: Basis, order: usize) -> Self {
        Self {
            basis,
            coeffs: (0..=order).map(|n| SymFun::zero(basis, n)).collect(),
        }
    }

    pub fn one(basis: Basis, order: usize) -> Self {
        let mut s = Self::zero(basis, order);
        s.coeffs[0] = SymFun::one(basis);
        s
    }

    /// Builds a series from `f(n)` for `n = 0..=order`.
    pub fn from_fn<F: FnMut(usize) -> SymFun>(basis: Basis, order: usize, mut f: F) -> Self {
        let coeffs = (0..=order)
            .map(|n| {
                let c = f(n);
                assert_eq!(c.degree(), n, "coefficient of z^{n} has wrong degree");
                assert_eq!(c.basis(), basis, "basis mismatch at z^{n}");
                c
            })
            .collect();
        Self { basis, coeffs }
    }

    /// `Σ_n b_n z^n` for the generators of `basis`, with `b_0 = 1`.
    pub fn generators(basis: Basis, order: usize) -> Self {
        Self::from_fn(basis, order, |n| {
            if n == 0 {
                SymFun::one(basis)
            } else {
                SymFun::generator(basis, n)
            }
        })
    }

    /// `E(z) = Σ e_n z^n`.
    pub fn e_series(order: usize) -> Self {
        Self::generators(Basis::Elementary, order)
    }

    /// `H(z) = Σ h_n z^n`.
    pub fn h_series(order: usize) -> Self {
        Self::generators(Basis::Homogeneous, order)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &SymFun {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[SymFun] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> SymSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            basis: self.basis,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn zip<F: Fn(&SymFun, &SymFun) -> SymFun>(&self, other: &SymSeries, f: F) -> SymSeries {
        let order = self.order().min(other.order());
        Self {
            basis: self.basis,
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &other.coeffs[n]))
                .collect(),
        }
    }

    pub fn add(&self, other: &SymSeries) -> SymSeries {
        self.zip(other, SymFun::add)
    }

    pub fn sub(&self, other: &SymSeries) -> SymSeries {
        self.zip(other, SymFun::sub)
    }

    pub fn neg(&self) -> SymSeries {
        self.map(SymFun::neg)
    }

    pub fn scale(&self, c: &LaurentPoly) -> SymSeries {
        self.map(|f| f.scale(c))
    }

    fn map<F: Fn(&SymFun) -> SymFun>(&self, f: F) -> SymSeries {
        Self {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `z ↦ tz`: the coefficient of `z^n` is multiplied by `t^n`.
    pub fn scale_z_by_t(&self) -> SymSeries {
        Self {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, f)| f.scale(&LaurentPoly::int_monomial(1, n as i64)))
                .collect(),
        }
    }

    /// Coefficientwise `∂/∂t`.
    pub fn t_derivative(&self) -> SymSeries {
        self.map(SymFun::t_derivative)
    }

    /// Graded convolution, truncated at the smaller order.
    pub fn mul(&self, other: &SymSeries) -> Result<SymSeries> {
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = SymFun::zero(self.basis, n);
            for j in 0..=n {
                let (a, b) = (&self.coeffs[j], &other.coeffs[n - j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b)?);
            }
            coeffs.push(acc);
        }
        Ok(Self {
            basis: self.basis,
            coeffs,
        })
    }

    /// `self / other`, requiring the constant term of `other` to be the scalar 1.
    ///
    /// `C_n = A_n − Σ_{j=1}^{n} B_j C_{n−j}`.
    pub fn div(&self, other: &SymSeries) -> Result<SymSeries> {
        if other.coeffs[0] != SymFun::one(self.basis) {
            return Err(Error::NonUnitConstant);
        }
        let order = self.order().min(other.order());
        let mut coeffs: Vec<SymFun> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = self.coeffs[n].clone();
            for j in 1..=n {
                let b = &other.coeffs[j];
                if b.is_zero() || coeffs[n - j].is_zero() {
                    continue;
                }
                c = c.sub(&b.mul(&coeffs[n - j])?);
            }
            coeffs.push(c);
        }
        Ok(Self {
            basis: self.basis,
            coeffs,
        })
    }

    pub fn pow(&self, k: u32) -> Result<SymSeries> {
        let mut acc = SymSeries::one(self.basis, self.order());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::t_quantum;
    use crate::symfun::Partition;

    fn denominator(order: usize) -> SymSeries {
        // 1 − Σ_{i≥2} t[i−1]_t e_i z^i
        SymSeries::from_fn(Basis::Elementary, order, |n| match n {
            0 => SymFun::one(Basis::Elementary),
            1 => SymFun::zero(Basis::Elementary, 1),
            _ => SymFun::generator(Basis::Elementary, n)
                .scale(&(&LaurentPoly::t() * &t_quantum(n as i64 - 1)))
                .neg(),
        })
    }

    #[test]
    fn reciprocal_round_trip() {
        let d = denominator(8);
        let one = SymSeries::one(Basis::Elementary, 8);
        let inv = one.div(&d).unwrap();
        assert_eq!(d.mul(&inv).unwrap(), one);
    }

    #[test]
    fn reciprocal_low_coefficients() {
        let inv = SymSeries::one(Basis::Elementary, 4).div(&denominator(4)).unwrap();
        assert!(inv.coeff(1).is_zero());
        assert_eq!(
            *inv.coeff(2),
            SymFun::generator(Basis::Elementary, 2).scale(&LaurentPoly::t())
        );
        let mut want = SymFun::zero(Basis::Elementary, 4);
        want.add_term(Partition::single(4), &LaurentPoly::t() * &t_quantum(3));
        want.add_term(Partition::rectangle(2, 2), LaurentPoly::int_monomial(1, 2));
        assert_eq!(*inv.coeff(4), want);
    }

    #[test]
    fn non_unit_constant_rejected() {
        let e = SymSeries::e_series(3);
        let bad = e.scale(&LaurentPoly::from_ints(0, &[1, -1]));
        assert_eq!(e.div(&bad), Err(Error::NonUnitConstant));
    }

    #[test]
    fn e_times_h_with_sign_is_one() {
        // E(−z)H(z) = 1 checked through a basis change of E into h.
        let order = 5;
        let h = SymSeries::h_series(order);
        let e_in_h = SymSeries::from_fn(Basis::Homogeneous, order, |n| {
            let e = SymFun::generator(Basis::Elementary, n.max(1));
            let e = if n == 0 {
                SymFun::one(Basis::Homogeneous)
            } else {
                crate::symfun::change_basis(&e, Basis::Homogeneous).unwrap()
            };
            if n % 2 == 1 {
                e.neg()
            } else {
                e
            }
        });
        assert_eq!(e_in_h.mul(&h).unwrap(), SymSeries::one(Basis::Homogeneous, order));
    }
}
