mod common;

use proptest::prelude::*;

use smirnov_core::combinatorics::{
    brute_enumerator, f_ones_specialization, fundamental_f, word_stats, Positions, Word,
};
use smirnov_core::exact_algebra::{
    cyclotomic, cyclotomic_degree, eulerian, eval_at_root_of_unity, q_binomial, t_quantum, LaurentPoly,
    QtPoly,
};
use smirnov_core::symfun::{
    change_basis, expand_in_variables, monomial_to_e, partitions_of, Basis, SymFun, SymSeries,
};
use smirnov_core::Variant;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..6, -5i64..6), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p += &LaurentPoly::int_monomial(c, e);
        }
        p
    })
}

fn t_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-3i64..4, 0..4).prop_map(|c| LaurentPoly::from_ints(0, &c))
}

fn qt_poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec((0u32..13, laurent()), 0..5).prop_map(|terms| {
        let mut p = QtPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

/// A random symmetric function of degree `n` in the given basis.
fn symfun(basis: Basis, n: usize) -> impl Strategy<Value = SymFun> {
    let parts = partitions_of(n);
    prop::collection::vec(t_poly(), parts.len()).prop_map(move |coeffs| {
        let mut f = SymFun::zero(basis, n);
        for (lambda, c) in parts.iter().zip(coeffs) {
            f.add_term(lambda.clone(), c);
        }
        f
    })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![
        Just(Basis::Elementary),
        Just(Basis::Homogeneous),
        Just(Basis::PowerSum)
    ]
}

#[test]
fn quantum_integer_reflection() {
    for n in 1..=10 {
        let reflected = -&t_quantum(n).shift(-n);
        assert_eq!(t_quantum(-n), reflected, "n={n}");
    }
}

#[test]
fn eulerian_is_des_and_exc_distribution() {
    for n in 2..=8 {
        let mut by_des = LaurentPoly::zero();
        let mut by_exc = LaurentPoly::zero();
        for s in common::perms(n) {
            by_des += &LaurentPoly::int_monomial(1, common::des(&s) as i64);
            by_exc += &LaurentPoly::int_monomial(1, common::exc(&s) as i64);
        }
        let a = eulerian(n as i64).unwrap();
        assert_eq!(a, by_des, "n={n}");
        assert_eq!(a, by_exc, "n={n}");
    }
}

#[test]
fn cyclotomic_degrees_and_binomials() {
    for n in 1..=12u32 {
        let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(
            divisors.iter().map(|&d| cyclotomic_degree(d)).sum::<usize>(),
            n as usize
        );
        let product: QtPoly = divisors
            .iter()
            .map(|&d| cyclotomic(d))
            .fold(QtPoly::one(), |a, b| &a * &b);
        let mut want = QtPoly::q_power(n);
        want.add_term(0, LaurentPoly::from_int(-1));
        assert_eq!(product, want, "n={n}");
        for k in 0..=n as i64 {
            let want = common::binomial(n as i64, k);
            assert_eq!(q_binomial(n, k).at_q_one(), LaurentPoly::from_int(want));
        }
    }
}

#[test]
fn euler_series_identity() {
    // t A_{m−1}(t) = (1 − t)^m Σ_{k≥1} k^{m−1} t^k, through t^12
    for m in 2..=5i64 {
        let series: Vec<i64> = (0..=12i64)
            .map(|k| if k == 0 { 0 } else { k.pow(m as u32 - 1) })
            .collect();
        let lhs = (&LaurentPoly::from_ints(0, &series) * &LaurentPoly::from_ints(0, &[1, -1]).pow(m as u32))
            .truncate(12);
        assert_eq!(lhs, eulerian(m - 1).unwrap().shift(1), "m={m}");
    }
}

#[test]
fn omega_exchanges_e_and_h_series() {
    let e = SymSeries::e_series(7);
    let h = SymSeries::h_series(7);
    for n in 1..=7 {
        let lhs = expand_in_variables(&e.coeff(n).omega().unwrap(), n);
        assert_eq!(lhs, expand_in_variables(h.coeff(n), n), "n={n}");
    }
}

#[test]
fn f_totals_match_ones_specialization() {
    for n in 1..=6 {
        for m in 1..=4 {
            for s in Positions::all_subsets(n) {
                let total = fundamental_f(n, s, m).total();
                let want = LaurentPoly::from_int(i64::try_from(f_ones_specialization(n, s, m)).unwrap());
                assert_eq!(total, want, "n={n} m={m} S={s}");
            }
        }
    }
}

#[test]
fn reversal_exchanges_less_and_greater() {
    for n in 1..=6 {
        for k in 1..=5 {
            let reversed =
                brute_enumerator(Variant::Less, n, k).map_coeffs(|c| c.invert().shift(n as i64 - 1));
            assert_eq!(brute_enumerator(Variant::Greater, n, k), reversed, "n={n} k={k}");
        }
    }
}

#[test]
fn labeled_cycle_is_symmetric() {
    for n in 2..=6 {
        let table = brute_enumerator(Variant::Cycle, n, n);
        assert!(monomial_to_e(&table, n, n).is_ok(), "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
        prop_assert_eq!(a.invert().invert(), a.clone());
        prop_assert_eq!((&a * &b).invert(), &a.invert() * &b.invert());
    }

    #[test]
    fn root_evaluation_is_a_ring_morphism(f in qt_poly(), g in qt_poly(), k in 1u32..13) {
        let (ef, eg) = (eval_at_root_of_unity(&f, k), eval_at_root_of_unity(&g, k));
        prop_assert_eq!(eval_at_root_of_unity(&(&f + &g), k), &ef + &eg);
        prop_assert_eq!(eval_at_root_of_unity(&(&f * &g), k), &ef * &eg);
    }

    #[test]
    fn division_by_cyclotomic_reconstructs(f in qt_poly(), k in 1u32..13) {
        let phi = cyclotomic(k);
        let (quot, rem) = f.div_rem_monic(&phi);
        prop_assert_eq!(&(&quot * &phi) + &rem, f);
        prop_assert!(rem.q_degree().is_none_or(|d| (d as usize) < cyclotomic_degree(k)));
    }

    #[test]
    fn cyclic_descents_add_the_wraparound(word in prop::collection::vec(1u32..5, 1..9)) {
        let w = Word(word.clone());
        let s = word_stats(&w);
        let wrap = (word[word.len() - 1] > word[0]) as usize;
        prop_assert_eq!(s.cdes, s.des + wrap);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monomial_round_trip(f in (1usize..6).prop_flat_map(|n| symfun(Basis::Elementary, n))) {
        let n = f.degree();
        prop_assert_eq!(monomial_to_e(&expand_in_variables(&f, n), n, n).unwrap(), f);
    }

    #[test]
    fn basis_changes_round_trip(b in basis(), f in symfun(Basis::Elementary, 4)) {
        let there = change_basis(&f, b).unwrap();
        prop_assert_eq!(change_basis(&there, Basis::Elementary).unwrap(), f.clone());
        prop_assert_eq!(expand_in_variables(&there, 4), expand_in_variables(&f, 4));
    }

    #[test]
    fn omega_is_an_involution(b in basis(), f in symfun(Basis::Elementary, 4)) {
        let g = change_basis(&f, b).unwrap();
        prop_assert_eq!(g.omega().unwrap().omega().unwrap(), g);
    }

    #[test]
    fn expansion_is_multiplicative(b in basis(), i in 1usize..4, j in 1usize..4) {
        let (f, g) = (SymFun::generator(b, i), SymFun::generator(b, j));
        let k = i + j;
        let product = expand_in_variables(&f.mul(&g).unwrap(), k);
        prop_assert_eq!(product, expand_in_variables(&f, k).mul(&expand_in_variables(&g, k)));
    }

    #[test]
    fn series_division_inverts_multiplication(f in symfun(Basis::Elementary, 2), g in symfun(Basis::Elementary, 3)) {
        let mut a = SymSeries::e_series(5);
        a = a.add(&SymSeries::from_fn(Basis::Elementary, 5, |n| match n {
            2 => f.clone(),
            3 => g.clone(),
            _ => SymFun::zero(Basis::Elementary, n),
        }));
        let b = SymSeries::e_series(5).scale_z_by_t();
        let quotient = a.div(&b).unwrap();
        prop_assert_eq!(quotient.mul(&b).unwrap(), a);
    }
}
