use serde::Serialize;

use crate::exact_algebra::{palindrome_unimodal, Center, LaurentPoly};
use crate::{Error, Result};

use super::{Basis, Partition, SymFun};

/// One `e_λ` coefficient and whether it lies in `N[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientSign {
    pub partition: Partition,
    pub coeff: LaurentPoly,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EPositivity {
    pub positive: bool,
    pub coefficients: Vec<CoefficientSign>,
}

fn require_e(f: &SymFun) -> Result<()> {
    if f.basis() == Basis::Elementary {
        Ok(())
    } else {
        Err(Error::UnsupportedBasis(f.basis().to_string()))
    }
}

/// Lists every `e`-coefficient with its `N[t]` membership.
pub fn e_positivity_report(f: &SymFun) -> Result<EPositivity> {
    require_e(f)?;
    let coefficients: Vec<CoefficientSign> = f
        .terms()
        .map(|(l, c)| CoefficientSign {
            partition: l.clone(),
            coeff: c.clone(),
            positive: c.is_in_nat_poly(),
        })
        .collect();
    Ok(EPositivity {
        positive: coefficients.iter().all(|c| c.positive),
        coefficients,
    })
}

/// `(palindromic, unimodal)` over all `e`-coefficients about one center.
pub fn e_unimodal_palindromic(f: &SymFun, center: Center) -> Result<(bool, bool)> {
    require_e(f)?;
    Ok(f.terms().fold((true, true), |(pal, uni), (_, c)| {
        let (p, u) = palindrome_unimodal(c, center);
        (pal && p, uni && u)
    }))
}

/// `0 ≤_e a_0 ≤_e … ≤_e a_c ≥_e … ≥_e a_d ≥_e 0` for the `t`-coefficients
/// `a_j`, where `r ≤_e s` means `s − r` is `e`-positive.
pub fn is_e_unimodal(f: &SymFun) -> Result<bool> {
    require_e(f)?;
    let (Some(lo), Some(hi)) = (f.t_valuation(), f.t_degree()) else {
        return Ok(true);
    };
    if lo < 0 {
        return Ok(false);
    }
    let zero = SymFun::zero(Basis::Elementary, f.degree());
    let level = |j: i64| {
        if (0..=hi).contains(&j) {
            f.t_coefficient(j)
        } else {
            zero.clone()
        }
    };
    // steps[j]: sign of a_j − a_{j−1} for j in 0..=hi+1
    let mut rising = true;
    for j in 0..=hi + 1 {
        let step = level(j).sub(&level(j - 1));
        let up = e_positivity_report(&step)?.positive;
        let down = e_positivity_report(&step.neg())?.positive;
        if rising && !up {
            if !down {
                return Ok(false);
            }
            rising = false;
        } else if !rising && !down {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Palindromic about the midpoint of its `t`-support.
pub fn is_t_palindromic(f: &SymFun) -> bool {
    match (f.t_valuation(), f.t_degree()) {
        (Some(lo), Some(hi)) => (lo..=hi).all(|j| f.t_coefficient(j) == f.t_coefficient(lo + hi - j)),
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_positive() {
        let report = e_positivity_report(&SymFun::zero(Basis::Elementary, 3)).unwrap();
        assert!(report.positive);
        assert!(report.coefficients.is_empty());
    }

    #[test]
    fn negative_coefficient_detected() {
        let f = SymFun::term(Basis::Elementary, Partition::single(3), LaurentPoly::from_int(-3));
        assert!(!e_positivity_report(&f).unwrap().positive);
    }

    #[test]
    fn single_palindromic_term() {
        let f = SymFun::term(
            Basis::Elementary,
            Partition::single(2),
            LaurentPoly::from_ints(0, &[1, 1]),
        );
        assert_eq!(e_unimodal_palindromic(&f, Center::half(1)).unwrap(), (true, true));
    }

    #[test]
    fn e_unimodality_compares_whole_coefficients() {
        let e = |p: &[u32], c: LaurentPoly| {
            SymFun::term(Basis::Elementary, Partition::new(p.to_vec()).unwrap(), c)
        };
        // each e-coefficient is unimodal, yet 5t^4 e_5 is not comparable to the t^3 level
        let f = e(&[4, 1], LaurentPoly::from_ints(1, &[1, 1, 1]))
            .add(&e(&[3, 2], LaurentPoly::from_ints(2, &[2, 5])))
            .add(&e(&[5], LaurentPoly::int_monomial(5, 4)));
        assert!(!is_e_unimodal(&f).unwrap());
        let g = e(&[2], LaurentPoly::from_ints(0, &[1, 2, 1]));
        assert!(is_e_unimodal(&g).unwrap());
        assert!(is_t_palindromic(&g));
        let h = e(&[2], LaurentPoly::from_ints(0, &[1, 0, 1]));
        assert!(!is_e_unimodal(&h).unwrap());
    }

    #[test]
    fn other_bases_rejected() {
        let f = SymFun::generator(Basis::PowerSum, 2);
        assert!(e_positivity_report(&f).is_err());
    }
}
