//! Exact coefficient arithmetic: rationals, Laurent polynomials in `t`,
//! bivariate `(q, t)` polynomials, cyclotomic quotients and shape tests.

mod cyclo;
mod laurent;
mod mpoly;
mod numbers;
mod qt;
mod shape;

pub use cyclo::{cyclotomic, cyclotomic_degree, eval_at_root_of_unity, CycloElem};
pub use laurent::LaurentPoly;
pub use mpoly::MPoly;
pub(crate) use numbers::eulerian_nn;
pub use numbers::{eulerian, q_binomial, q_factorial, q_integer, t_quantum};
pub use qt::QtPoly;
pub use shape::{is_palindromic, is_unimodal, natural_center, palindrome_unimodal, Center};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
