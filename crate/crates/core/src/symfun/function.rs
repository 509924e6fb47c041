use std::collections::BTreeMap;
use std::fmt;

use crate::exact_algebra::{LaurentPoly, Rational};
use crate::{Error, Result};

use super::Partition;

/// A basis of the degree-`n` symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Elementary,
    Homogeneous,
    PowerSum,
    Monomial,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Monomial => "m",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "e" => Some(Basis::Elementary),
            "h" => Some(Basis::Homogeneous),
            "p" => Some(Basis::PowerSum),
            "m" => Some(Basis::Monomial),
            _ => None,
        }
    }

    pub fn is_multiplicative(self) -> bool {
        !matches!(self, Basis::Monomial)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Homogeneous symmetric function with coefficients in `Q[t, t^{-1}]`.
///
/// In the power-sum basis, `normalized` records whether coefficients refer
/// to `p_λ / z_λ` (true) or to `p_λ` (false).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    basis: Basis,
    degree: usize,
    normalized: bool,
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl SymFun {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        Self {
            basis,
            degree,
            normalized: false,
            terms: BTreeMap::new(),
        }
    }

    /// Zero in the `p_λ / z_λ` normalization.
    pub fn zero_normalized_p(degree: usize) -> Self {
        Self {
            normalized: true,
            ..Self::zero(Basis::PowerSum, degree)
        }
    }

    /// The scalar `c` in degree 0.
    pub fn scalar(basis: Basis, c: LaurentPoly) -> Self {
        Self::term(basis, Partition::empty(), c)
    }

    pub fn one(basis: Basis) -> Self {
        Self::scalar(basis, LaurentPoly::one())
    }

    /// `c · b_λ`.
    pub fn term(basis: Basis, lambda: Partition, c: LaurentPoly) -> Self {
        let mut f = Self::zero(basis, lambda.size());
        f.add_term(lambda, c);
        f
    }

    /// The generator `b_i` (`e_i`, `h_i`, `p_i`, or `m_(i)`).
    pub fn generator(basis: Basis, i: usize) -> Self {
        Self::term(basis, Partition::single(i as u32), LaurentPoly::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Adds `c · b_λ`. Panics if `λ` has the wrong size.
    pub fn add_term(&mut self, lambda: Partition, c: LaurentPoly) {
        assert_eq!(lambda.size(), self.degree, "inhomogeneous term {lambda}");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    fn check_compatible(&self, other: &SymFun) {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        assert_eq!(self.degree, other.degree, "degree mismatch");
        assert_eq!(self.normalized, other.normalized, "p normalization mismatch");
    }

    pub fn add(&self, other: &SymFun) -> SymFun {
        self.check_compatible(other);
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFun) -> SymFun {
        self.check_compatible(other);
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> SymFun {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &LaurentPoly) -> SymFun {
        self.map_coeffs(|v| v * c)
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> SymFun {
        let mut out = SymFun {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// Coefficientwise `∂/∂t`.
    pub fn t_derivative(&self) -> SymFun {
        self.map_coeffs(LaurentPoly::derivative)
    }

    /// Power-sum coefficients relative to `p_λ` instead of `p_λ / z_λ`.
    pub fn to_raw_p(&self) -> SymFun {
        if !self.normalized {
            return self.clone();
        }
        let mut out = SymFun::zero(Basis::PowerSum, self.degree);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.scale(&Rational::new(1.into(), l.z())));
        }
        out
    }

    /// Power-sum coefficients relative to `p_λ / z_λ`.
    pub fn to_normalized_p(&self) -> Result<SymFun> {
        if self.basis != Basis::PowerSum {
            return Err(Error::UnsupportedBasis(self.basis.to_string()));
        }
        if self.normalized {
            return Ok(self.clone());
        }
        let mut out = SymFun::zero_normalized_p(self.degree);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.scale(&Rational::from_integer(l.z())));
        }
        Ok(out)
    }

    /// Product in a multiplicative basis (index union).
    pub fn mul(&self, other: &SymFun) -> Result<SymFun> {
        if self.basis != other.basis || !self.basis.is_multiplicative() {
            return Err(Error::UnsupportedBasis(format!(
                "{} × {}",
                self.basis, other.basis
            )));
        }
        let a = self.to_raw_p();
        let b = other.to_raw_p();
        let mut out = SymFun::zero(self.basis, self.degree + other.degree);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        if self.normalized && other.normalized {
            out.to_normalized_p()
        } else {
            Ok(out)
        }
    }

    /// The involution `ω`: `e_λ ↔ h_λ`, and `p_λ ↦ ε_λ p_λ`.
    pub fn omega(&self) -> Result<SymFun> {
        match self.basis {
            Basis::Elementary => Ok(SymFun {
                basis: Basis::Homogeneous,
                ..self.clone()
            }),
            Basis::Homogeneous => Ok(SymFun {
                basis: Basis::Elementary,
                ..self.clone()
            }),
            Basis::PowerSum => {
                let mut out = SymFun {
                    terms: BTreeMap::new(),
                    ..self.clone()
                };
                for (l, c) in &self.terms {
                    out.add_term(l.clone(), c.scale_int(l.sign()));
                }
                Ok(out)
            }
            Basis::Monomial => Err(Error::UnsupportedBasis("m".into())),
        }
    }

    /// Minimum `t`-valuation over all coefficients.
    pub fn t_valuation(&self) -> Option<i64> {
        self.terms.values().filter_map(LaurentPoly::valuation).min()
    }

    pub fn t_degree(&self) -> Option<i64> {
        self.terms.values().filter_map(LaurentPoly::degree).max()
    }

    /// Coefficient of `t^j`, a symmetric function with rational coefficients.
    pub fn t_coefficient(&self, j: i64) -> SymFun {
        self.map_coeffs(|c| LaurentPoly::constant(c.coeff(j)))
    }
}

impl fmt::Display for SymFun {
    /// One `basis(partition): coefficient` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let norm = if self.normalized { "/z" } else { "" };
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}{l}{norm}: {c}", self.basis)?;
        }
        Ok(())
    }
}
