use num_bigint::BigInt;

use super::{LaurentPoly, QtPoly, Rational};
use crate::{Error, Result};

/// `[n]_t = (t^n - 1)/(t - 1)` for any integer `n`.
///
/// For negative `n` this is the Laurent polynomial `-t^n [-n]_t`.
pub fn t_quantum(n: i64) -> LaurentPoly {
    match n {
        0 => LaurentPoly::zero(),
        n if n > 0 => LaurentPoly::from_ints(0, &vec![1; n as usize]),
        n => LaurentPoly::from_ints(n, &vec![-1; (-n) as usize]),
    }
}

/// Eulerian polynomial `A_n(t)`, with the convention `A_0(t) = t^{-1}`.
///
/// Computed from the triangle `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
pub fn eulerian(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::invalid(
            "n",
            format!("Eulerian index must be >= 0, got {n}"),
        ));
    }
    if n == 0 {
        return Ok(LaurentPoly::int_monomial(1, -1));
    }
    let n = n as usize;
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 2..=n {
        let mut next = vec![BigInt::from(0); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::from(0);
            if k < row.len() {
                v += &row[k] * BigInt::from(k + 1);
            }
            if k >= 1 {
                v += &row[k - 1] * BigInt::from(m - k);
            }
            *slot = v;
        }
        row = next;
    }
    Ok(LaurentPoly::from_terms(
        row.into_iter()
            .enumerate()
            .map(|(k, c)| (k as i64, Rational::from_integer(c))),
    ))
}

/// Infallible `A_n(t)` for nonnegative `n`.
pub(crate) fn eulerian_nn(n: usize) -> LaurentPoly {
    eulerian(n as i64).expect("nonnegative index")
}

/// `[n]_q = 1 + q + ... + q^{n-1}` as a pure-`q` polynomial.
pub fn q_integer(n: u32) -> QtPoly {
    QtPoly::from_q_ints(&vec![1; n as usize])
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: u32) -> QtPoly {
    (1..=n).fold(QtPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[n choose k]_q`; zero outside `0 <= k <= n`.
///
/// Uses the recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial(n: u32, k: i64) -> QtPoly {
    if k < 0 || k > n as i64 {
        return QtPoly::zero();
    }
    let k = k as usize;
    let n = n as usize;
    // row[j] = [m choose j]_q
    let mut row: Vec<QtPoly> = vec![QtPoly::one()];
    for m in 1..=n {
        let mut next = vec![QtPoly::zero(); m + 1];
        next[0] = QtPoly::one();
        next[m] = QtPoly::one();
        for j in 1..m {
            next[j] = &row[j - 1] + &(&QtPoly::q_power(j as u32) * &row[j]);
        }
        row = next;
    }
    row.swap_remove(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    #[test]
    fn t_quantum_examples() {
        assert_eq!(t_quantum(3), LaurentPoly::from_ints(0, &[1, 1, 1]));
        assert!(t_quantum(0).is_zero());
        assert_eq!(t_quantum(-2), LaurentPoly::from_ints(-2, &[-1, -1]));
    }

    #[test]
    fn negative_quantum_reflection() {
        for n in 1..=10 {
            assert_eq!(t_quantum(-n), -(t_quantum(n).shift(-n)));
        }
    }

    #[test]
    fn t_quantum_is_geometric_ratio() {
        // (t - 1) [n]_t = t^n - 1
        let tm1 = LaurentPoly::from_ints(0, &[-1, 1]);
        for n in -6..=6 {
            let lhs = &tm1 * &t_quantum(n);
            let rhs = &LaurentPoly::int_monomial(1, n) - &LaurentPoly::one();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(0).unwrap(), LaurentPoly::int_monomial(1, -1));
        assert_eq!(eulerian(1).unwrap(), LaurentPoly::one());
        assert_eq!(eulerian(3).unwrap(), LaurentPoly::from_ints(0, &[1, 4, 1]));
        assert_eq!(eulerian(4).unwrap(), LaurentPoly::from_ints(0, &[1, 11, 11, 1]));
        assert!(eulerian(-1).is_err());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), QtPoly::from_q_ints(&[1, 1]));
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), QtPoly::one());
        }
        assert_eq!(q_binomial(4, 2), QtPoly::from_q_ints(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn q_binomial_matches_factorial_ratio() {
        for n in 0..=9u32 {
            for k in 0..=n {
                let ratio = q_factorial(n)
                    .div_exact_monic(&q_factorial(k))
                    .and_then(|r| r.div_exact_monic(&q_factorial(n - k)))
                    .expect("q-factorials divide");
                assert_eq!(q_binomial(n, k as i64), ratio);
            }
        }
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        for n in 0..=12u32 {
            for k in 0..=n {
                let v = q_binomial(n, k as i64).at_q_one();
                let expected = binomial(n as u64, k as u64);
                assert_eq!(v, LaurentPoly::from_int(expected as i64));
            }
        }
    }
}
