use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_algebra::{LaurentPoly, QtPoly};
use crate::symfun::MonomialTable;

use super::Positions;

/// `Σ x_{f(1)} ⋯ x_{f(n)}` over `f: [n] → [k]` with `f(i) ≥ f(i+1)`, strict
/// for `i ∈ S`.
pub fn fundamental_f(n: usize, s: Positions, k: usize) -> MonomialTable {
    let mut table = MonomialTable::new(k);
    let mut exps = vec![0u8; k];
    fill(n, s, k as u32, 1, k as u32, &mut exps, &mut table);
    table
}

fn fill(n: usize, s: Positions, k: u32, i: usize, bound: u32, exps: &mut Vec<u8>, out: &mut MonomialTable) {
    if i > n {
        out.add_term(exps.clone(), LaurentPoly::one());
        return;
    }
    // f(i) ≤ bound, where bound already accounts for strictness at i − 1.
    for v in 1..=bound.min(k) {
        exps[v as usize - 1] += 1;
        let next = if s.contains(i) { v - 1 } else { v };
        fill(n, s, k, i + 1, next, exps, out);
        exps[v as usize - 1] -= 1;
    }
}

/// `F_{n,S}(1^m) = C(m + n − 1 − |S|, n)`.
pub fn f_ones_specialization(n: usize, s: Positions, m: usize) -> BigInt {
    let top = (m + n) as i64 - 1 - s.len() as i64;
    if top < n as i64 {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(top), BigInt::from(n))
}

/// Numerator of the stable principal specialization `x_i := q^{i−1}`:
/// `F_{n,S}(1, q, q², …) = q^{Σ S} / Π_{j=1}^{n} (1 − q^j)`.
///
/// Returns the numerator and the length `n` of the denominator product.
pub fn f_principal_specialization(n: usize, s: Positions) -> (QtPoly, usize) {
    (QtPoly::q_power(s.sum() as u32), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::Rational;
    use crate::symfun::{expand_in_variables, Basis, SymFun};
    use num_traits::ToPrimitive;

    #[test]
    fn empty_and_full_sets() {
        for n in 1..=4 {
            for k in 1..=4 {
                assert_eq!(
                    fundamental_f(n, Positions::empty(), k),
                    expand_in_variables(&SymFun::generator(Basis::Homogeneous, n), k)
                );
                assert_eq!(
                    fundamental_f(n, Positions::interval(n - 1), k),
                    expand_in_variables(&SymFun::generator(Basis::Elementary, n), k)
                );
            }
        }
    }

    #[test]
    fn single_monomial_example() {
        let mut want = MonomialTable::new(2);
        want.add_term(vec![2, 1], LaurentPoly::one());
        assert_eq!(fundamental_f(3, Positions::from_slice(&[1]), 2), want);
    }

    #[test]
    fn ones_specialization_examples() {
        assert_eq!(f_ones_specialization(4, Positions::empty(), 1), BigInt::from(1));
        assert_eq!(
            f_ones_specialization(3, Positions::from_slice(&[1]), 2),
            BigInt::from(1)
        );
        assert_eq!(
            f_ones_specialization(3, Positions::from_slice(&[1, 2]), 3),
            BigInt::from(1)
        );
    }

    #[test]
    fn ones_specialization_counts_monomials() {
        for n in 1..=6 {
            for m in 1..=4 {
                for s in Positions::all_subsets(n) {
                    let total = fundamental_f(n, s, m).total();
                    let want = Rational::from_integer(f_ones_specialization(n, s, m));
                    assert_eq!(total, LaurentPoly::constant(want), "n={n} m={m} S={s}");
                }
            }
        }
    }

    /// Truncated `Σ_f q^{Σ (f(i) − 1)}` compared with `q^{ΣS} / Π(1 − q^j)`.
    #[test]
    fn principal_specialization_matches_truncated_sum() {
        let order = 10u32;
        for n in 1..=4usize {
            // Values above order + 1 contribute only beyond q^order.
            let k = order as usize + 1;
            for s in Positions::all_subsets(n) {
                let table = fundamental_f(n, s, k);
                let mut direct = vec![0i64; order as usize + 1];
                for (e, c) in table.terms() {
                    let w: usize = e.iter().enumerate().map(|(i, &x)| i * x as usize).sum();
                    if w <= order as usize {
                        direct[w] += c.coeff(0).to_integer().to_i64().unwrap();
                    }
                }
                // numerator · Π 1/(1 − q^j) as a truncated series.
                let (num, len) = f_principal_specialization(n, s);
                let mut series = vec![0i64; order as usize + 1];
                if let Some(start) = num.q_degree() {
                    if start <= order {
                        series[start as usize] = 1;
                    }
                }
                for j in 1..=len {
                    for d in j..=order as usize {
                        series[d] += series[d - j];
                    }
                }
                assert_eq!(direct, series, "n={n} S={s}");
            }
        }
    }
}
