use crate::combinatorics::brute_enumerator;
use crate::exact_algebra::{t_quantum, LaurentPoly};
use crate::symfun::{monomial_to_e, Basis, Partition, SymFun, SymSeries};
use crate::{Error, Result, Variant};

/// `(a_i, b_i, c_i)` with `a_i = Σ_{j=0}^{i−2} (j+1) t^j`,
/// `b_i = Σ_{j=1}^{i−1} (i−j) t^j` and `c_i = i t [i−2]_t`.
pub fn abc(i: usize) -> Result<(LaurentPoly, LaurentPoly, LaurentPoly)> {
    if i < 2 {
        return Err(Error::invalid("i", format!("need i ≥ 2, got {i}")));
    }
    let a = LaurentPoly::from_ints(0, &(1..i as i64).collect::<Vec<_>>());
    let b = LaurentPoly::from_ints(1, &(1..i as i64).rev().collect::<Vec<_>>());
    let c = t_quantum(i as i64 - 2).shift(1).scale_int(i as i64);
    Ok((a, b, c))
}

/// Coefficient of `e_i z^i` in the numerator of the variant's series over `D`.
pub fn numerator_coefficient(v: Variant, i: usize) -> LaurentPoly {
    let ii = i as i64;
    let q = |m: i64| t_quantum(m);
    match (v, i) {
        (_, 0) => LaurentPoly::zero(),
        (Variant::Plain, _) => q(ii),
        (Variant::Tilde, _) => LaurentPoly::int_monomial(ii, ii - 1),
        (Variant::Equal, 1) => LaurentPoly::one(),
        (_, 1) => LaurentPoly::zero(),
        (Variant::Less, _) => abc(i).unwrap().0,
        (Variant::Greater, _) => abc(i).unwrap().1,
        (Variant::Equal, _) => -abc(i).unwrap().2,
        (Variant::NotEqual, _) => &q(ii) + &q(ii - 2).shift(1).scale_int(ii),
        (Variant::TildeNotEqual, _) => q(ii - 1).shift(1).scale_int(ii),
        (Variant::Cycle, _) => &(&q(2) * &q(ii)) + &q(ii - 3).shift(2).scale_int(ii),
    }
}

/// `Σ_i g_i e_i z^i` for a coefficient sequence `g`.
pub fn e_generator_series<F: Fn(usize) -> LaurentPoly>(order: usize, g: F) -> SymSeries {
    SymSeries::from_fn(Basis::Elementary, order, |n| {
        if n == 0 {
            SymFun::scalar(Basis::Elementary, g(0))
        } else {
            SymFun::generator(Basis::Elementary, n).scale(&g(n))
        }
    })
}

/// `D(x,t,z) = 1 − Σ_{i≥2} t [i−1]_t e_i z^i`.
pub fn denominator_series(order: usize) -> SymSeries {
    e_generator_series(order, |i| match i {
        0 => LaurentPoly::one(),
        1 => LaurentPoly::zero(),
        _ => -t_quantum(i as i64 - 1).shift(1),
    })
}

pub fn numerator_series(v: Variant, order: usize) -> SymSeries {
    e_generator_series(order, |i| numerator_coefficient(v, i))
}

/// `Σ_n V_n z^n` up to `z^order`, as numerator over `D`.
pub fn closed_series(v: Variant, order: usize) -> SymSeries {
    numerator_series(v, order)
        .div(&denominator_series(order))
        .expect("D has constant term 1")
}

fn check_n(v: Variant, n: usize) -> Result<()> {
    if n < v.min_n() {
        return Err(Error::invalid(
            "n",
            format!("{v} needs n ≥ {}, got {n}", v.min_n()),
        ));
    }
    Ok(())
}

pub(crate) fn require_polynomial(f: SymFun, what: &str) -> Result<SymFun> {
    if f.t_valuation().is_some_and(|v| v < 0) {
        return Err(Error::NegativeValuation(what.to_string()));
    }
    Ok(f)
}

/// The `e`-expansion of the degree-`n` enumerator.
pub fn closed_form(v: Variant, n: usize) -> Result<SymFun> {
    check_n(v, n)?;
    let f = closed_series(v, n).coeff(n).clone();
    require_polynomial(f, &format!("{v}_{n}"))
}

/// The `e`-expansion of the brute-force table in `n` variables.
pub fn brute_e_expansion(v: Variant, n: usize) -> Result<SymFun> {
    check_n(v, n)?;
    monomial_to_e(&brute_enumerator(v, n, n), n, n)
}

/// Where the enumerator coefficients of a series identity come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesSource {
    ClosedForm,
    /// Brute-force tables solved into the `e` basis, in `n` variables.
    BruteForce,
}

/// `Σ_{n=1}^{order} V_n z^n` from the chosen source.
pub fn enumerator_series(v: Variant, order: usize, source: SeriesSource) -> Result<SymSeries> {
    match source {
        SeriesSource::ClosedForm => Ok(closed_series(v, order)),
        SeriesSource::BruteForce => {
            let mut coeffs = vec![SymFun::zero(Basis::Elementary, 0)];
            for n in 1..=order {
                coeffs.push(if n < v.min_n() {
                    SymFun::zero(Basis::Elementary, n)
                } else {
                    brute_e_expansion(v, n)?
                });
            }
            Ok(SymSeries::from_fn(Basis::Elementary, order, |n| {
                coeffs[n].clone()
            }))
        }
    }
}

/// Both sides of a cross-multiplied series identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesIdentity {
    pub lhs: SymSeries,
    pub rhs: SymSeries,
}

impl SeriesIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `E(tz) − tE(z)`, equal to `(1 − t) D`.
pub fn cleared_denominator(order: usize) -> SymSeries {
    let e = SymSeries::e_series(order);
    e.scale_z_by_t().sub(&e.scale(&LaurentPoly::t()))
}

/// The `(1−t)`-cleared identities with denominator `E(tz) − tE(z)`:
///
/// * `W`:  `(1 + Σ W_n z^n)(E(tz) − tE(z)) = (1−t) E(z)`
/// * `W<`: `(Σ W<_n z^n)(E(tz) − tE(z)) = (1−t) ∂_t Σ_{i≥2} [i]_t e_i z^i`
/// * `W>`: `(Σ W>_n z^n)(E(tz) − tE(z)) = (1−t) Σ_{i≥2} b_i e_i z^i`
/// * `W̃`:  `(Σ W̃_n z^n)(E(tz) − tE(z)) = (1−t) ∂_t E(tz)`
pub fn cleared_form_check(v: Variant, order: usize, source: SeriesSource) -> Result<SeriesIdentity> {
    let one_minus_t = LaurentPoly::from_ints(0, &[1, -1]);
    let mut series = enumerator_series(v, order, source)?;
    let numerator = match v {
        Variant::Plain => {
            series = series.add(&SymSeries::one(Basis::Elementary, order));
            SymSeries::e_series(order)
        }
        Variant::Less => e_generator_series(order, |i| {
            if i >= 2 {
                t_quantum(i as i64).derivative()
            } else {
                LaurentPoly::zero()
            }
        }),
        Variant::Greater => e_generator_series(order, |i| {
            if i >= 2 {
                abc(i).unwrap().1
            } else {
                LaurentPoly::zero()
            }
        }),
        Variant::Tilde => SymSeries::e_series(order).scale_z_by_t().t_derivative(),
        other => {
            return Err(Error::invalid(
                "variant",
                format!("no cleared form for {other}; use W, Wless, Wgreater or Wtilde"),
            ))
        }
    };
    Ok(SeriesIdentity {
        lhs: series.mul(&cleared_denominator(order))?,
        rhs: numerator.scale(&one_minus_t),
    })
}

/// `(Σ V_n z^n) · D = numerator`, the defining identity of each closed form.
pub fn denominator_form_check(v: Variant, order: usize, source: SeriesSource) -> Result<SeriesIdentity> {
    let series = enumerator_series(v, order, source)?;
    Ok(SeriesIdentity {
        lhs: series.mul(&denominator_series(order))?,
        rhs: numerator_series(v, order),
    })
}

/// The `e_λ` coefficient of `W̃_n` for the two special shapes, `None` otherwise:
///
/// * last part 1, `k` parts: `r · t^{k−1} Π_{i<k} [λ_i − 1]_t`, where `r` counts
///   the distinct orderings of `λ_1..λ_{k−1}`
/// * `λ = j^k`: `j t^{j+k−2} [j−1]_t^{k−1}`
pub fn tilde_shape_coefficient(lambda: &Partition) -> Option<LaurentPoly> {
    let parts = lambda.parts();
    let k = parts.len();
    if k == 0 {
        return None;
    }
    if parts[k - 1] == 1 {
        let head = Partition::from_unsorted(parts[..k - 1].to_vec());
        let orderings = head
            .multiplicities()
            .iter()
            .fold(factorial(k - 1), |acc, &(_, m)| acc / factorial(m));
        let prod: LaurentPoly = head.parts().iter().map(|&p| t_quantum(p as i64 - 1)).product();
        return Some(prod.shift(k as i64 - 1).scale_int(orderings as i64));
    }
    if parts.iter().all(|&p| p == parts[0]) {
        let j = parts[0] as i64;
        return Some(
            t_quantum(j - 1)
                .pow(k as u32 - 1)
                .shift(j + k as i64 - 2)
                .scale_int(j),
        );
    }
    None
}

fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}
