//! Symmetric functions over `Q[t, t^{-1}]`, basis changes through finitely
//! many variables, and graded series in `z`.

mod function;
mod monomial;
mod partition;
mod positivity;
mod series;

pub use function::{Basis, SymFun};
pub use monomial::{
    change_basis, expand_in_variables, monomial_to_basis, monomial_to_e, monomial_to_h, monomial_to_m,
    monomial_to_p, MonomialTable,
};
pub use partition::{partitions_of, Partition};
pub use positivity::{
    e_positivity_report, e_unimodal_palindromic, is_e_unimodal, is_t_palindromic, CoefficientSign,
    EPositivity,
};
pub use series::SymSeries;

/// `z_λ = Π i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> num_bigint::BigInt {
    lambda.z()
}
