use crate::exact_algebra::{eulerian_nn, t_quantum, LaurentPoly};
use crate::symfun::{partitions_of, Basis, Partition, SymFun, SymSeries};
use crate::{Error, Result, Variant};

use super::closed::require_polynomial;

/// `A_m(t)`, with `A_0 = t^{-1}`.
fn eulerian_l(m: usize) -> LaurentPoly {
    eulerian_nn(m)
}

fn quantum_product(lambda: &Partition) -> LaurentPoly {
    lambda.parts().iter().map(|&p| t_quantum(p as i64)).product()
}

/// `t A_{l(λ)−1}(t) Π [λ_i]_t`, whose coefficients drive the `W<`/`W>` shuffles.
pub fn shuffle_base(lambda: &Partition) -> LaurentPoly {
    (&eulerian_l(lambda.len() - 1) * &quantum_product(lambda)).shift(1)
}

/// `Σ_{i=0}^{n−2} (i+1) a_{i+1} t^i` for `Σ a_i t^i = shuffle_base(λ)`.
pub fn shuffle_less(lambda: &Partition) -> LaurentPoly {
    let a = shuffle_base(lambda);
    let n = lambda.size() as i64;
    let mut out = LaurentPoly::zero();
    for i in 0..=n - 2 {
        out.add_term(i, a.coeff(i + 1) * crate::exact_algebra::rat(i + 1));
    }
    out
}

/// `Σ_{i=1}^{n−1} (n−i) a_{n−i} t^i` for `Σ a_i t^i = shuffle_base(λ)`.
pub fn shuffle_greater(lambda: &Partition) -> LaurentPoly {
    let a = shuffle_base(lambda);
    let n = lambda.size() as i64;
    let mut out = LaurentPoly::zero();
    for i in 1..n {
        out.add_term(i, a.coeff(n - i) * crate::exact_algebra::rat(n - i));
    }
    out
}

/// Coefficient of `p_λ / z_λ` in the `ω`-image of the variant.
pub fn powersum_coefficient(v: Variant, lambda: &Partition) -> Result<LaurentPoly> {
    let l = lambda.len();
    let n = lambda.size() as i64;
    let c = match v {
        Variant::Plain => &eulerian_l(l) * &quantum_product(lambda),
        Variant::Less => shuffle_base(lambda).derivative(),
        Variant::Greater => shuffle_greater(lambda),
        Variant::Tilde => {
            let parts = lambda.parts();
            let sum: LaurentPoly = (0..l)
                .map(|i| {
                    let others: LaurentPoly = (0..l)
                        .filter(|&j| j != i)
                        .map(|j| t_quantum(parts[j] as i64))
                        .product();
                    others.shift(parts[i] as i64).scale_int(parts[i] as i64)
                })
                .sum();
            &eulerian_l(l - 1) * &sum
        }
        Variant::TildeNotEqual if l == 1 => t_quantum(n - 1).shift(1).scale_int(n),
        Variant::TildeNotEqual => shuffle_base(lambda).scale_int(n),
        other => {
            return Err(Error::invalid(
                "variant",
                format!("no power-sum formula for {other}"),
            ))
        }
    };
    Ok(c)
}

/// `ω V_n` in the `p_λ / z_λ` normalization.
pub fn powersum_form(v: Variant, n: usize) -> Result<SymFun> {
    if n == 0 {
        return Err(Error::invalid("n", "need n ≥ 1"));
    }
    let mut f = SymFun::zero_normalized_p(n);
    for lambda in partitions_of(n) {
        let c = powersum_coefficient(v, &lambda)?;
        f.add_term(lambda, c);
    }
    require_polynomial(f, &format!("omega {v}_{n}"))
}

/// Coefficient of `p_n / n` in `ω V_n`: `[n]_t + nt[n−2]_t` for `W≠`,
/// `[2]_t[n]_t + nt²[n−3]_t` for the cycle.
pub fn powersum_top_coefficient(v: Variant, n: usize) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::invalid("n", format!("need n ≥ 2, got {n}")));
    }
    let nn = n as i64;
    match v {
        Variant::NotEqual => Ok(&t_quantum(nn) + &t_quantum(nn - 2).shift(1).scale_int(nn)),
        Variant::Cycle => Ok(&(&t_quantum(2) * &t_quantum(nn)) + &t_quantum(nn - 3).shift(2).scale_int(nn)),
        other => Err(Error::invalid(
            "variant",
            format!("top coefficient formula is for Wneq and XCn, not {other}"),
        )),
    }
}

/// `Σ_{λ⊢n} k^{l(λ)} Π (1 − t^{λ_i}) p_λ / z_λ`, the `z^n` coefficient of
/// [`h_ratio_power`].
pub fn h_ratio_power_form(k: i64, n: usize) -> SymFun {
    let mut f = SymFun::zero_normalized_p(n);
    for lambda in partitions_of(n) {
        let prod: LaurentPoly = lambda
            .parts()
            .iter()
            .map(|&p| &LaurentPoly::one() - &LaurentPoly::int_monomial(1, p as i64))
            .product();
        f.add_term(lambda.clone(), prod.scale_int(k.pow(lambda.len() as u32)));
    }
    f
}

/// `(H(z) / H(tz))^k` in the `h` basis.
pub fn h_ratio_power(k: u32, order: usize) -> Result<SymSeries> {
    let h = SymSeries::h_series(order);
    h.div(&h.scale_z_by_t())?.pow(k)
}

/// Both sides of `(1−t)H(z) = (H(tz) − tH(z)) · S(z)`, where `S(z)` is the
/// series whose `z^n` coefficient is `Σ_λ A_{l(λ)} Π[λ_i]_t p_λ/z_λ`
/// rewritten in the `h` basis.
pub fn stembridge_sides(order: usize) -> Result<(SymSeries, SymSeries)> {
    let one_minus_t = LaurentPoly::from_ints(0, &[1, -1]);
    let h = SymSeries::h_series(order);
    let mut coeffs = vec![SymFun::one(Basis::Homogeneous)];
    for n in 1..=order {
        let p = powersum_form(Variant::Plain, n)?;
        coeffs.push(crate::symfun::change_basis(&p, Basis::Homogeneous)?);
    }
    let s = SymSeries::from_fn(Basis::Homogeneous, order, |n| coeffs[n].clone());
    let den = h.scale_z_by_t().sub(&h.scale(&LaurentPoly::t()));
    Ok((h.scale(&one_minus_t), den.mul(&s)?))
}
