use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_algebra::{LaurentPoly, Rational};
use crate::{Error, Result};

use super::{Basis, Partition, SymFun};

/// Polynomial in `x_1..x_k` with Laurent-polynomial coefficients in `t`,
/// keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTable {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, LaurentPoly>,
}

impl MonomialTable {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `c` (empty monomial).
    pub fn constant(nvars: usize, c: LaurentPoly) -> Self {
        let mut out = Self::new(nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u8>, c: LaurentPoly) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        if let Some(slot) = self.terms.get_mut(&exps) {
            *slot += &c;
            if slot.is_zero() {
                self.terms.remove(&exps);
            }
        } else {
            self.terms.insert(exps, c);
        }
    }

    /// Adds `t^exp x^exps` with coefficient one.
    pub fn add_t_monomial(&mut self, exps: Vec<u8>, t_exp: i64) {
        self.add_term(exps, LaurentPoly::int_monomial(1, t_exp));
    }

    pub fn get(&self, exps: &[u8]) -> LaurentPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of all monomials, if uniform.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &MonomialTable) -> MonomialTable {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MonomialTable) -> MonomialTable {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &MonomialTable) -> MonomialTable {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = MonomialTable::new(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> MonomialTable {
        self.map_coeffs(|v| v * c)
    }

    pub fn map_coeffs<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> MonomialTable {
        let mut out = MonomialTable::new(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Specialization `x_1 = … = x_k = 1`.
    pub fn total(&self) -> LaurentPoly {
        self.terms.values().cloned().sum()
    }

    /// Entries whose exponent vector is weakly decreasing, i.e. the
    /// coefficients of the monomial symmetric functions `m_λ`.
    pub fn sorted_entries(&self) -> impl Iterator<Item = (Partition, &LaurentPoly)> + '_ {
        self.terms
            .iter()
            .filter(|(e, _)| is_weakly_decreasing(e))
            .map(|(e, c)| (exps_to_partition(e), c))
    }
}

impl fmt::Display for MonomialTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mono = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| {
                    if x == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{x}", j + 1)
                    }
                })
                .join("*");
            let mono = if mono.is_empty() { "1".to_string() } else { mono };
            write!(f, "{mono}: {c}")?;
        }
        Ok(())
    }
}

fn is_weakly_decreasing(e: &[u8]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn exps_to_partition(e: &[u8]) -> Partition {
    Partition::from_unsorted(e.iter().map(|&x| x as u32).collect())
}

type ScalarPoly = BTreeMap<Vec<u8>, BigInt>;

fn scalar_mul(a: &ScalarPoly, b: &ScalarPoly) -> ScalarPoly {
    let mut out = ScalarPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn unit(k: usize) -> ScalarPoly {
    ScalarPoly::from([(vec![0; k], BigInt::one())])
}

fn generator_expansion(basis: Basis, i: usize, k: usize) -> ScalarPoly {
    let mut out = ScalarPoly::new();
    match basis {
        Basis::Elementary => {
            for subset in (0..k).combinations(i) {
                let mut e = vec![0u8; k];
                for j in subset {
                    e[j] = 1;
                }
                out.insert(e, BigInt::one());
            }
        }
        Basis::Homogeneous => {
            for multiset in (0..k).combinations_with_replacement(i) {
                let mut e = vec![0u8; k];
                for j in multiset {
                    e[j] += 1;
                }
                out.insert(e, BigInt::one());
            }
        }
        Basis::PowerSum => {
            for j in 0..k {
                let mut e = vec![0u8; k];
                e[j] = i as u8;
                out.insert(e, BigInt::one());
            }
        }
        Basis::Monomial => unreachable!("monomial basis has no generators"),
    }
    out
}

fn orbit_sum(lambda: &Partition, k: usize) -> ScalarPoly {
    let Some(padded) = lambda.padded(k) else {
        return ScalarPoly::new();
    };
    padded
        .into_iter()
        .permutations(k)
        .unique()
        .map(|e| (e, BigInt::one()))
        .collect()
}

type ExpansionKey = (Basis, Partition, usize);

fn expansion_cache() -> &'static Mutex<HashMap<ExpansionKey, Arc<ScalarPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<ExpansionKey, Arc<ScalarPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Expansion of the basis element `b_λ` in `k` variables (`p` unnormalized).
fn basis_expansion(basis: Basis, lambda: &Partition, k: usize) -> Arc<ScalarPoly> {
    let key = (basis, lambda.clone(), k);
    if let Some(hit) = expansion_cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let value = match basis {
        Basis::Monomial => orbit_sum(lambda, k),
        _ => lambda.parts().iter().fold(unit(k), |acc, &part| {
            scalar_mul(&acc, &generator_expansion(basis, part as usize, k))
        }),
    };
    let value = Arc::new(value);
    expansion_cache().lock().unwrap().insert(key, Arc::clone(&value));
    value
}

/// Sets `x_{k+1} = x_{k+2} = … = 0`.
pub fn expand_in_variables(f: &SymFun, k: usize) -> MonomialTable {
    assert!(k >= 1, "need at least one variable");
    let mut out = MonomialTable::new(k);
    for (lambda, c) in f.terms() {
        let c = if f.is_normalized() {
            c.scale(&Rational::new(BigInt::one(), lambda.z()))
        } else {
            c.clone()
        };
        for (e, m) in basis_expansion(f.basis(), lambda, k).iter() {
            out.add_term(e.clone(), c.scale(&Rational::from_integer(m.clone())));
        }
    }
    out
}

fn check_table(table: &MonomialTable, n: usize, k: usize) -> Result<()> {
    if k < n {
        return Err(Error::invalid(
            "vars",
            format!("need at least {n} variables for degree {n}, got {k}"),
        ));
    }
    if table.nvars() != k {
        return Err(Error::invalid(
            "vars",
            format!("table has {} variables, expected {k}", table.nvars()),
        ));
    }
    if let Some(bad) = table
        .terms()
        .map(|(e, _)| e)
        .find(|e| e.iter().map(|&x| x as usize).sum::<usize>() != n)
    {
        return Err(Error::NotSymmetric(format!(
            "monomial {bad:?} does not have degree {n}"
        )));
    }
    Ok(())
}

fn subtract_scaled(residual: &mut MonomialTable, expansion: &ScalarPoly, c: &LaurentPoly) {
    for (e, m) in expansion {
        residual.add_term(e.clone(), -c.scale(&Rational::from_integer(m.clone())));
    }
}

fn residual_error(residual: &MonomialTable) -> Error {
    let (e, c) = residual.terms().next().expect("nonempty residual");
    Error::NotSymmetric(format!(
        "{} unmatched monomials, e.g. {e:?} with coefficient {c}",
        residual.len()
    ))
}

/// Solves for the `e`-expansion of a degree-`n` table in `k ≥ n` variables.
///
/// Peels the lexicographically largest sorted monomial `x^μ` with `e_{μ'}`,
/// whose leading monomial it is. A nonzero final residual means the table is
/// not symmetric.
pub fn monomial_to_e(table: &MonomialTable, n: usize, k: usize) -> Result<SymFun> {
    check_table(table, n, k)?;
    let mut residual = table.clone();
    let mut out = SymFun::zero(Basis::Elementary, n);
    loop {
        let next = residual
            .terms
            .iter()
            .rev()
            .find(|(e, _)| is_weakly_decreasing(e))
            .map(|(e, c)| (exps_to_partition(e), c.clone()));
        let Some((mu, c)) = next else { break };
        let lambda = mu.conjugate();
        let expansion = basis_expansion(Basis::Elementary, &lambda, k);
        subtract_scaled(&mut residual, &expansion, &c);
        out.add_term(lambda, c);
    }
    if residual.is_zero() {
        Ok(out)
    } else {
        Err(residual_error(&residual))
    }
}

/// Solves for the power-sum expansion (coefficients of `p_λ`, unnormalized).
///
/// `p_λ` contains `m_λ` with coefficient `Π m_i(λ)!` and otherwise only
/// coarser monomials, so the system is peeled from the lexicographically
/// smallest sorted monomial upward.
pub fn monomial_to_p(table: &MonomialTable, n: usize, k: usize) -> Result<SymFun> {
    check_table(table, n, k)?;
    let mut residual = table.clone();
    let mut out = SymFun::zero(Basis::PowerSum, n);
    loop {
        let next = residual
            .terms
            .iter()
            .filter(|(e, _)| is_weakly_decreasing(e))
            .map(|(e, c)| (exps_to_partition(e), c.clone()))
            // Partition's order is reverse lex, so the max is the lex-smallest.
            .max_by(|a, b| a.0.cmp(&b.0));
        let Some((lambda, a)) = next else { break };
        let lead: BigInt = lambda
            .multiplicities()
            .iter()
            .map(|&(_, m)| (1..=m).map(BigInt::from).product::<BigInt>())
            .product();
        let c = a.scale(&Rational::new(BigInt::one(), lead));
        let expansion = basis_expansion(Basis::PowerSum, &lambda, k);
        subtract_scaled(&mut residual, &expansion, &c);
        out.add_term(lambda, c);
    }
    if residual.is_zero() {
        Ok(out)
    } else {
        Err(residual_error(&residual))
    }
}

/// Reads off the monomial-basis expansion and certifies symmetry.
pub fn monomial_to_m(table: &MonomialTable, n: usize, k: usize) -> Result<SymFun> {
    check_table(table, n, k)?;
    let mut out = SymFun::zero(Basis::Monomial, n);
    for (lambda, c) in table.sorted_entries() {
        out.add_term(lambda, c.clone());
    }
    let back = expand_in_variables(&out, k);
    if back == *table {
        Ok(out)
    } else {
        Err(residual_error(&table.sub(&back)))
    }
}

/// `h`-expansion: the `e`-expansion of `ω f`, with `ω` applied in the `p` basis.
pub fn monomial_to_h(table: &MonomialTable, n: usize, k: usize) -> Result<SymFun> {
    let p = monomial_to_p(table, n, k)?;
    let omega_table = expand_in_variables(&p.omega()?, k);
    monomial_to_e(&omega_table, n, k)?.omega()
}

/// Basis conversion from a monomial table through variable expansion.
pub fn monomial_to_basis(table: &MonomialTable, n: usize, k: usize, basis: Basis) -> Result<SymFun> {
    match basis {
        Basis::Elementary => monomial_to_e(table, n, k),
        Basis::Homogeneous => monomial_to_h(table, n, k),
        Basis::PowerSum => monomial_to_p(table, n, k),
        Basis::Monomial => monomial_to_m(table, n, k),
    }
}

/// Rewrites `f` in another basis by expanding in `deg f` variables.
pub fn change_basis(f: &SymFun, basis: Basis) -> Result<SymFun> {
    let n = f.degree();
    let k = n.max(1);
    monomial_to_basis(&expand_in_variables(f, k), n, k, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn table(k: usize, entries: &[(&[u8], i64)]) -> MonomialTable {
        let mut t = MonomialTable::new(k);
        for (e, c) in entries {
            t.add_term(e.to_vec(), LaurentPoly::from_int(*c));
        }
        t
    }

    #[test]
    fn generator_examples() {
        let e2 = expand_in_variables(&SymFun::generator(Basis::Elementary, 2), 2);
        assert_eq!(e2, table(2, &[(&[1, 1], 1)]));
        let p2 = expand_in_variables(&SymFun::generator(Basis::PowerSum, 2), 2);
        assert_eq!(p2, table(2, &[(&[2, 0], 1), (&[0, 2], 1)]));
        let h2 = expand_in_variables(&SymFun::generator(Basis::Homogeneous, 2), 2);
        assert_eq!(h2, table(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]));
    }

    #[test]
    fn too_few_variables_vanish() {
        let e3 = SymFun::generator(Basis::Elementary, 3);
        assert!(expand_in_variables(&e3, 2).is_zero());
    }

    #[test]
    fn round_trip_e21() {
        let f = SymFun::term(Basis::Elementary, part(&[2, 1]), LaurentPoly::one());
        let t = expand_in_variables(&f, 3);
        assert_eq!(monomial_to_e(&t, 3, 3).unwrap(), f);
    }

    #[test]
    fn incomplete_orbit_is_rejected() {
        let t = table(3, &[(&[2, 1, 0], 1)]);
        assert!(matches!(monomial_to_e(&t, 3, 3), Err(Error::NotSymmetric(_))));
        assert!(matches!(monomial_to_p(&t, 3, 3), Err(Error::NotSymmetric(_))));
        assert!(matches!(monomial_to_m(&t, 3, 3), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn h_in_power_sums() {
        // h_2 = (p_2 + p_1^2)/2 = p_2/z_(2) + p_11/z_(11)
        let h2 = expand_in_variables(&SymFun::generator(Basis::Homogeneous, 2), 2);
        let p = monomial_to_p(&h2, 2, 2).unwrap().to_normalized_p().unwrap();
        let mut want = SymFun::zero_normalized_p(2);
        want.add_term(part(&[2]), LaurentPoly::one());
        want.add_term(part(&[1, 1]), LaurentPoly::one());
        assert_eq!(p, want);
    }

    #[test]
    fn h_basis_via_omega() {
        let e21 = SymFun::term(Basis::Homogeneous, part(&[2, 1]), LaurentPoly::t());
        let back = change_basis(&e21, Basis::Homogeneous).unwrap();
        assert_eq!(back, e21);
    }

    #[test]
    fn too_few_variables_is_an_error() {
        let t = table(2, &[(&[1, 1], 1)]);
        assert!(matches!(
            monomial_to_e(&t, 3, 2),
            Err(Error::InvalidArgument { .. })
        ));
    }
}
