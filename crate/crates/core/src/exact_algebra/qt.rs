use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{LaurentPoly, Rational};

/// Polynomial in `q` whose coefficients are Laurent polynomials in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    terms: BTreeMap<u32, LaurentPoly>,
}

impl QtPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    /// A `q`-free element.
    pub fn constant(c: LaurentPoly) -> Self {
        Self::monomial(c, 0)
    }

    /// `c(t) * q^exp`.
    pub fn monomial(c: LaurentPoly, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp` with unit coefficient.
    pub fn q_power(exp: u32) -> Self {
        Self::monomial(LaurentPoly::one(), exp)
    }

    /// Pure-`q` polynomial `Σ coeffs[i] q^i`.
    pub fn from_q_ints(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, LaurentPoly::from_int(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> LaurentPoly {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Substitutes `q := 1`.
    pub fn at_q_one(&self) -> LaurentPoly {
        self.terms.values().cloned().sum()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    /// Leading coefficient when that coefficient is the scalar 1.
    pub(crate) fn is_monic(&self) -> bool {
        self.terms.values().next_back().is_some_and(|c| c.is_one())
    }

    /// Division with remainder by a monic polynomial in `q`.
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &QtPoly) -> (QtPoly, QtPoly) {
        assert!(divisor.is_monic(), "divisor must be monic in q");
        let d = divisor.q_degree().expect("monic divisor is nonzero");
        let mut rem = self.clone();
        let mut quot = QtPoly::zero();
        while let Some(rd) = rem.q_degree() {
            if rd < d {
                break;
            }
            let lead = rem.coeff(rd);
            let shift = rd - d;
            quot.add_term(shift, lead.clone());
            for (e, c) in &divisor.terms {
                rem.add_term(e + shift, -(c * &lead));
            }
        }
        (quot, rem)
    }

    /// Exact quotient by a monic divisor, `None` if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &QtPoly) -> Option<QtPoly> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// True when every coefficient is a rational constant in `t`.
    pub fn is_pure_q(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.len() == 1 && c.valuation() == Some(0))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Integer coefficient of `q^e t^0` for pure-`q` values.
    pub fn q_coeff_rational(&self, exp: u32) -> Rational {
        self.coeff(exp).coeff(0)
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &QtPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl Sub<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QtPoly {
    type Output = QtPoly;
    fn sub(mut self, rhs: QtPoly) -> QtPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        let mut out = QtPoly::zero();
        out -= self;
        out
    }
}

impl Mul<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

impl From<LaurentPoly> for QtPoly {
    fn from(c: LaurentPoly) -> Self {
        QtPoly::constant(c)
    }
}

impl std::iter::Sum for QtPoly {
    fn sum<I: Iterator<Item = QtPoly>>(iter: I) -> Self {
        iter.fold(QtPoly::zero(), |a, b| a + b)
    }
}
