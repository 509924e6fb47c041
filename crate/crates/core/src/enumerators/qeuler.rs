use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{inverse, perm_stats, permutations};
use crate::exact_algebra::{eulerian_nn, eval_at_root_of_unity, q_binomial, t_quantum, LaurentPoly, QtPoly};
use crate::{Error, Result};

/// The q-analogs of the Eulerian polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QEulerian {
    /// `Σ_σ q^{maj σ − exc σ} t^{exc σ}`.
    MajExc,
    /// `Σ_σ q^{m(σ⁻¹)} t^{des σ}`.
    Des,
    /// `Σ_{σ(1)<σ(n)} q^{m(σ⁻¹)} t^{des σ}`.
    Less,
    /// `Σ_σ q^{m(σ⁻¹)} t^{cdes σ}`.
    Tilde,
}

impl QEulerian {
    pub const ALL: [QEulerian; 4] = [
        QEulerian::MajExc,
        QEulerian::Des,
        QEulerian::Less,
        QEulerian::Tilde,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            QEulerian::MajExc => "Amajexc",
            QEulerian::Des => "A",
            QEulerian::Less => "Aless",
            QEulerian::Tilde => "Atilde",
        }
    }
}

impl fmt::Display for QEulerian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for QEulerian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Amajexc" | "A_majexc" | "majexc" => QEulerian::MajExc,
            "A" | "Ades" | "A_des" | "des" => QEulerian::Des,
            "Aless" | "A<" | "Alt" => QEulerian::Less,
            "Atilde" | "A~" | "Acirc" => QEulerian::Tilde,
            other => return Err(Error::Parse(format!("unknown q-Eulerian family '{other}'"))),
        })
    }
}

impl Serialize for QEulerian {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// The q-statistic `m(τ)` applied to `τ = σ⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QStatistic {
    /// Sum of positions `i` with `τ(i) − τ(i+1) ≥ 2`.
    DropsAtLeastTwo,
    /// Sum of positions `i` with `τ(i+1) − τ(i) ≥ 2`.
    RisesAtLeastTwo,
}

fn check_range(n: usize) -> Result<()> {
    if !(1..=10).contains(&n) {
        return Err(Error::invalid("n", format!("need 1 ≤ n ≤ 10, got {n}")));
    }
    Ok(())
}

pub fn q_eulerian(which: QEulerian, n: usize) -> Result<QtPoly> {
    q_eulerian_with(which, n, QStatistic::DropsAtLeastTwo)
}

/// [`q_eulerian`] with a chosen q-statistic (ignored by `MajExc`).
pub fn q_eulerian_with(which: QEulerian, n: usize, stat: QStatistic) -> Result<QtPoly> {
    check_range(n)?;
    let mut out = QtPoly::zero();
    for sigma in permutations(n) {
        let s = perm_stats(&sigma);
        let (q_exp, t_exp) = match which {
            QEulerian::MajExc => (s.maj - s.exc, s.exc),
            _ => {
                if which == QEulerian::Less && sigma[0] >= sigma[n - 1] {
                    continue;
                }
                let inv = perm_stats(&inverse(&sigma));
                let q_exp = match stat {
                    QStatistic::DropsAtLeastTwo => inv.maj2des,
                    QStatistic::RisesAtLeastTwo => inv.maj2asc,
                };
                let t_exp = if which == QEulerian::Tilde { s.cdes } else { s.des };
                (q_exp, t_exp)
            }
        };
        out.add_term(q_exp as u32, LaurentPoly::int_monomial(1, t_exp as i64));
    }
    Ok(out)
}

/// Right side coefficient, times `[n]_q!`, of the q-exponential identities
/// `Σ_n P_n z^n/[n]_q! · (exp_q(tz) − t exp_q(z)) = R(z)`:
///
/// * `Des`:   `R = (1−t) exp_q(z)`, with `P_0 = 1`
/// * `Less`:  `R = (1−t) ∂_t Σ_{i≥2} [i]_t z^i/[i]_q!`
/// * `Tilde`: `R = (1−t) ∂_t exp_q(tz)`
fn q_exp_rhs(which: QEulerian, n: usize) -> LaurentPoly {
    let one_minus_t = LaurentPoly::from_ints(0, &[1, -1]);
    let body = match which {
        QEulerian::Des | QEulerian::MajExc => LaurentPoly::one(),
        QEulerian::Less if n >= 2 => t_quantum(n as i64).derivative(),
        QEulerian::Less => LaurentPoly::zero(),
        QEulerian::Tilde => LaurentPoly::int_monomial(n as i64, n as i64 - 1),
    };
    &one_minus_t * &body
}

/// `(lhs, rhs)` of the cleared q-exponential identity at `z^n`:
/// `Σ_j qbinom(n,j) P_j (t^{n−j} − t) = [n]_q! R_n`.
pub fn q_exp_identity(which: QEulerian, n: usize) -> Result<(QtPoly, QtPoly)> {
    let mut lhs = QtPoly::zero();
    for j in 0..=n {
        let p_j = if j == 0 {
            match which {
                QEulerian::Des | QEulerian::MajExc => QtPoly::one(),
                _ => continue,
            }
        } else {
            q_eulerian(which, j)?
        };
        let factor = &LaurentPoly::int_monomial(1, (n - j) as i64) - &LaurentPoly::t();
        lhs = &lhs + &(&q_binomial(n as u32, j as i64) * &p_j.scale(&factor));
    }
    Ok((lhs, QtPoly::from(q_exp_rhs(which, n))))
}

/// `A_m(t)` with the convention `A_0(t) = t^{-1}`.
fn eulerian_l(m: usize) -> LaurentPoly {
    eulerian_nn(m)
}

/// Values of a q-Eulerian polynomial at a primitive `k`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEvaluation {
    /// By reduction modulo `Φ_k`; `None` if the residue is not constant in q.
    pub reduced: Option<LaurentPoly>,
    /// From the closed formula in `A_{n/k}`, `[k]_t`.
    pub closed: LaurentPoly,
    /// From the recursion through `A_{n−k}(ξ_k, t)`, where one applies.
    pub recursive: Option<LaurentPoly>,
}

impl RootEvaluation {
    pub fn holds(&self) -> bool {
        self.reduced.as_ref() == Some(&self.closed)
            && self.recursive.as_ref().is_none_or(|r| *r == self.closed)
    }
}

/// `A_m(ξ_k, t)` by reduction, with `A_0 = t^{-1}`.
fn des_at_root(m: usize, k: usize) -> Result<Option<LaurentPoly>> {
    if m == 0 {
        return Ok(Some(LaurentPoly::int_monomial(1, -1)));
    }
    Ok(eval_at_root_of_unity(&q_eulerian(QEulerian::Des, m)?, k as u32).to_t_polynomial())
}

/// Evaluation at a primitive `k`-th root of unity, `k | n`, three ways.
///
/// * `Des`:   `A_{n/k}(t) [k]_t^{n/k}`
/// * `Less`:  `d/dt (t A_{n/k−1}(t) [k]_t^{n/k})`, and `d/dt(t [k]_t A_{n−k}(ξ_k,t))`
/// * `Tilde`: `n t^k A_{n/k−1}(t) [k]_t^{n/k−1}`, and `n t^k A_{n−k}(ξ_k,t)`
pub fn root_of_unity(which: QEulerian, n: usize, k: usize) -> Result<RootEvaluation> {
    if n < 2 {
        return Err(Error::invalid("n", format!("need n ≥ 2, got {n}")));
    }
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::invalid("q-root", format!("{k} does not divide {n}")));
    }
    let r = n / k;
    let qk = t_quantum(k as i64);
    let (closed, recursive) = match which {
        QEulerian::Des => (&eulerian_l(r) * &qk.pow(r as u32), None),
        QEulerian::Less => {
            let closed = (&eulerian_l(r - 1) * &qk.pow(r as u32)).shift(1).derivative();
            let rec = des_at_root(n - k, k)?.map(|a| (&qk * &a).shift(1).derivative());
            (closed, rec)
        }
        QEulerian::Tilde => {
            let nn = n as i64;
            let closed = (&eulerian_l(r - 1) * &qk.pow(r as u32 - 1))
                .shift(k as i64)
                .scale_int(nn);
            let rec = des_at_root(n - k, k)?.map(|a| a.shift(k as i64).scale_int(nn));
            (closed, rec)
        }
        QEulerian::MajExc => {
            return Err(Error::invalid(
                "variant",
                "root evaluation is stated for A, Aless and Atilde",
            ))
        }
    };
    let reduced = eval_at_root_of_unity(&q_eulerian(which, n)?, k as u32).to_t_polynomial();
    Ok(RootEvaluation {
        reduced,
        closed,
        recursive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(0, c)
    }

    #[test]
    fn n3_values() {
        let a3 = q_eulerian(QEulerian::Des, 3).unwrap();
        let mut want = QtPoly::from(lp(&[1, 2, 1]));
        want.add_term(1, LaurentPoly::t());
        want.add_term(2, LaurentPoly::t());
        assert_eq!(a3, want);
        assert_eq!(q_eulerian(QEulerian::MajExc, 3).unwrap(), want);

        let mut tilde = QtPoly::from(LaurentPoly::from_ints(1, &[1, 3]));
        tilde.add_term(1, LaurentPoly::t());
        tilde.add_term(2, LaurentPoly::t());
        assert_eq!(q_eulerian(QEulerian::Tilde, 3).unwrap(), tilde);

        assert_eq!(q_eulerian(QEulerian::Less, 3).unwrap(), QtPoly::from(lp(&[1, 2])));
    }

    #[test]
    fn root_examples() {
        let r = root_of_unity(QEulerian::Tilde, 3, 3).unwrap();
        assert!(r.holds());
        assert_eq!(r.closed, LaurentPoly::int_monomial(3, 2));
        let r = root_of_unity(QEulerian::Des, 4, 2).unwrap();
        assert!(r.holds());
        assert_eq!(r.closed, lp(&[1, 3, 3, 1]));
        let r = root_of_unity(QEulerian::Less, 3, 1).unwrap();
        assert!(r.holds());
        assert_eq!(r.closed, lp(&[1, 2]));
        assert!(root_of_unity(QEulerian::Des, 4, 3).is_err());
    }

    #[test]
    fn rising_statistic_breaks_the_root_formula() {
        let literal = q_eulerian_with(QEulerian::Tilde, 3, QStatistic::RisesAtLeastTwo).unwrap();
        let at_root = eval_at_root_of_unity(&literal, 3).to_t_polynomial();
        assert_eq!(at_root, Some(LaurentPoly::int_monomial(3, 1)));
    }

    #[test]
    fn exponential_identities_low_order() {
        for which in [QEulerian::Des, QEulerian::Less, QEulerian::Tilde] {
            for n in 1..=5 {
                let (lhs, rhs) = q_exp_identity(which, n).unwrap();
                assert_eq!(lhs, rhs, "{which} n={n}");
            }
        }
    }
}
