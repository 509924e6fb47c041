use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{
    brute_enumerator, chromatic_qsym, inverse, perm_stats, permutations, Digraph, GraphMode,
};
use crate::exact_algebra::{
    eulerian, natural_center, palindrome_unimodal, t_quantum, Center, LaurentPoly, Rational,
};
use crate::symfun::{
    change_basis, e_positivity_report, e_unimodal_palindromic, expand_in_variables, is_e_unimodal,
    is_t_palindromic, monomial_to_e, partitions_of, Basis, MonomialTable, Partition, SymFun,
};
use crate::{Error, Result, Variant};

use super::closed::{
    abc, brute_e_expansion, cleared_form_check, closed_form, denominator_form_check, tilde_shape_coefficient,
    SeriesSource,
};
use super::fexp::f_expansion;
use super::powersum::{
    h_ratio_power, h_ratio_power_form, powersum_form, powersum_top_coefficient, shuffle_base,
    shuffle_greater, shuffle_less,
};
use super::qeuler::{q_eulerian, q_exp_identity, root_of_unity, QEulerian};
use super::report::{CheckRecord, Report, Suite, VerifyConfig};
use super::transfer::{distinguished_element_sides, transfer_matrix_check};

type Task = Box<dyn Fn() -> Vec<CheckRecord> + Send + Sync>;

/// A task producing one record; an evaluation error becomes a failing record.
fn check<F>(name: &'static str, params: Value, f: F) -> Task
where
    F: Fn(&'static str, Value) -> Result<CheckRecord> + Send + Sync + 'static,
{
    Box::new(move || {
        vec![f(name, params.clone()).unwrap_or_else(|e| CheckRecord::error(name, params.clone(), &e))]
    })
}

const FOUR: [Variant; 4] = [Variant::Plain, Variant::Less, Variant::Greater, Variant::Tilde];
const POWERSUM: [Variant; 5] = [
    Variant::Plain,
    Variant::Less,
    Variant::Greater,
    Variant::Tilde,
    Variant::TildeNotEqual,
];
const POSITIVE: [Variant; 7] = [
    Variant::Plain,
    Variant::Less,
    Variant::Greater,
    Variant::NotEqual,
    Variant::Tilde,
    Variant::TildeNotEqual,
    Variant::Cycle,
];
const ROOTS: [QEulerian; 3] = [QEulerian::Des, QEulerian::Less, QEulerian::Tilde];

/// `t^{n−1} p(1/t)`.
fn reverse(p: &LaurentPoly, n: usize) -> LaurentPoly {
    p.invert().shift(n as i64 - 1)
}

fn oracle(cfg: &VerifyConfig) -> Vec<Task> {
    let k = cfg.vars();
    let mut tasks = Vec::new();
    for v in Variant::ALL {
        for n in v.min_n()..=cfg.max_n {
            tasks.push(check(
                "oracle",
                json!({"variant": v, "n": n, "vars": k}),
                move |name, params| {
                    let closed = closed_form(v, n)?;
                    let brute = brute_enumerator(v, n, k);
                    let pass = expand_in_variables(&closed, k) == brute;
                    let rhs = if k >= n {
                        serde_json::to_value(monomial_to_e(&brute, n, k)?).expect("serializable")
                    } else {
                        serde_json::to_value(&brute).expect("serializable")
                    };
                    Ok(CheckRecord::new(name, params, pass, &closed, &rhs))
                },
            ));
        }
    }
    for n in 1..=cfg.max_n {
        tasks.push(check(
            "refinement",
            json!({"n": n, "vars": k, "identity": "W = W< + W> + W="}),
            move |name, params| {
                let parts = brute_enumerator(Variant::Less, n, k)
                    .add(&brute_enumerator(Variant::Greater, n, k))
                    .add(&brute_enumerator(Variant::Equal, n, k));
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &brute_enumerator(Variant::Plain, n, k),
                    &parts,
                ))
            },
        ));
        if n >= 2 {
            tasks.push(check(
                "refinement",
                json!({"n": n, "vars": k, "identity": "W≠ = W< + W>"}),
                move |name, params| {
                    let parts =
                        brute_enumerator(Variant::Less, n, k).add(&brute_enumerator(Variant::Greater, n, k));
                    Ok(CheckRecord::equal(
                        name,
                        params,
                        &brute_enumerator(Variant::NotEqual, n, k),
                        &parts,
                    ))
                },
            ));
        }
        tasks.push(check(
            "refinement",
            json!({"n": n, "vars": k, "identity": "W~ = tW< + W> + W="}),
            move |name, params| {
                let parts = brute_enumerator(Variant::Less, n, k)
                    .scale(&LaurentPoly::t())
                    .add(&brute_enumerator(Variant::Greater, n, k))
                    .add(&brute_enumerator(Variant::Equal, n, k));
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &brute_enumerator(Variant::Tilde, n, k),
                    &parts,
                ))
            },
        ));
        tasks.push(check(
            "refinement",
            json!({"n": n, "vars": k, "identity": "W~≠ = tW< + W>"}),
            move |name, params| {
                let parts = brute_enumerator(Variant::Less, n, k)
                    .scale(&LaurentPoly::t())
                    .add(&brute_enumerator(Variant::Greater, n, k));
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &brute_enumerator(Variant::TildeNotEqual, n, k),
                    &parts,
                ))
            },
        ));
        tasks.push(check(
            "reversal",
            json!({"n": n, "vars": k}),
            move |name, params| {
                let less = brute_enumerator(Variant::Less, n, k).map_coeffs(|c| reverse(c, n));
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &brute_enumerator(Variant::Greater, n, k),
                    &less,
                ))
            },
        ));
        tasks.push(check(
            "graph",
            json!({"n": n, "vars": k, "graph": "path"}),
            move |name, params| {
                let chrom = chromatic_qsym(&Digraph::path(n), k, GraphMode::Labeled);
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &chrom,
                    &brute_enumerator(Variant::Plain, n, k),
                ))
            },
        ));
        if n >= 2 {
            tasks.push(check(
                "graph",
                json!({"n": n, "vars": k, "graph": "directed cycle"}),
                move |name, params| {
                    let chrom = chromatic_qsym(&Digraph::directed_cycle(n), k, GraphMode::Directed);
                    Ok(CheckRecord::equal(
                        name,
                        params,
                        &chrom,
                        &brute_enumerator(Variant::TildeNotEqual, n, k),
                    ))
                },
            ));
        }
    }
    tasks
}

fn epos(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for v in POSITIVE {
        for n in v.min_n()..=cfg.max_order {
            tasks.push(check(
                "e_positive",
                json!({"variant": v, "n": n}),
                move |name, params| {
                    let report = e_positivity_report(&closed_form(v, n)?)?;
                    Ok(CheckRecord::new(
                        name,
                        params,
                        report.positive,
                        &report.positive,
                        &true,
                    ))
                },
            ));
        }
    }
    for n in 2..=cfg.max_order {
        tasks.push(check(
            "equal_top_coefficient",
            json!({"n": n}),
            move |name, params| {
                let f = closed_form(Variant::Equal, n)?;
                let want = -t_quantum(n as i64 - 2).shift(1).scale_int(n as i64);
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &f.coeff(&Partition::single(n as u32)),
                    &want,
                ))
            },
        ));
    }
    for n in 1..=cfg.max_order {
        tasks.push(check(
            "equal_sign_pattern",
            json!({"n": n}),
            move |name, params| {
                let report = e_positivity_report(&closed_form(Variant::Equal, n)?)?;
                let pass = report.coefficients.iter().all(|c| {
                    if c.partition.smallest_part() == Some(1) {
                        c.coeff.is_in_nat_poly()
                    } else {
                        (-&c.coeff).is_in_nat_poly()
                    }
                });
                Ok(CheckRecord::new(
                    name,
                    params,
                    pass,
                    &report.coefficients,
                    &"N[t] iff a part equals 1, else -N[t]",
                ))
            },
        ));
    }
    tasks
}

fn powersum(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for v in POWERSUM {
        for n in 1..=cfg.max_n {
            tasks.push(check(
                "powersum_oracle",
                json!({"variant": v, "n": n}),
                move |name, params| {
                    let form = powersum_form(v, n)?;
                    let table = expand_in_variables(&form.omega()?, n);
                    let pass = table == brute_enumerator(v, n, n);
                    Ok(CheckRecord::new(
                        name,
                        params,
                        pass,
                        &form,
                        &brute_e_expansion(v, n)?,
                    ))
                },
            ));
        }
        for n in 1..=cfg.max_order {
            tasks.push(check(
                "powersum_closed",
                json!({"variant": v, "n": n}),
                move |name, params| {
                    let form = powersum_form(v, n)?;
                    let closed = closed_form(v, n)?;
                    let pass = expand_in_variables(&form.omega()?, n) == expand_in_variables(&closed, n);
                    Ok(CheckRecord::new(name, params, pass, &form, &closed))
                },
            ));
        }
    }
    for n in 1..=cfg.max_order {
        tasks.push(check("shuffles", json!({"n": n}), move |name, params| {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for lambda in partitions_of(n) {
                let less = shuffle_less(&lambda);
                let greater = shuffle_greater(&lambda);
                lhs.push(json!({"partition": lambda, "less": less, "greater": greater}));
                rhs.push(json!({
                    "partition": lambda,
                    "less": shuffle_base(&lambda).derivative(),
                    "greater": reverse(&less, n),
                }));
            }
            Ok(CheckRecord::equal(name, params, &lhs, &rhs))
        }));
        tasks.push(check("shuffle_sum", json!({"n": n}), move |name, params| {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            let mut palindromic = true;
            for lambda in partitions_of(n).into_iter().filter(|l| l.len() > 1) {
                let base = shuffle_base(&lambda);
                palindromic &= crate::exact_algebra::is_palindromic(&base, Center::half(n as i64));
                lhs.push(&shuffle_less(&lambda).shift(1) + &shuffle_greater(&lambda));
                rhs.push(base.scale_int(n as i64));
            }
            Ok(CheckRecord::new(
                name,
                params,
                palindromic && lhs == rhs,
                &lhs,
                &rhs,
            ))
        }));
    }
    for v in [Variant::NotEqual, Variant::Cycle] {
        for n in 2..=cfg.max_order {
            tasks.push(check(
                "top_coefficient",
                json!({"variant": v, "n": n}),
                move |name, params| {
                    let top = powersum_top_coefficient(v, n)?;
                    let e_coeff = closed_form(v, n)?.coeff(&Partition::single(n as u32));
                    Ok(CheckRecord::equal(name, params, &top, &e_coeff))
                },
            ));
        }
        for n in 2..=cfg.max_n {
            tasks.push(check(
                "top_coefficient_oracle",
                json!({"variant": v, "n": n}),
                move |name, params| {
                    let top = powersum_top_coefficient(v, n)?;
                    let omega = brute_e_expansion(v, n)?.omega()?;
                    let p = change_basis(&omega, Basis::PowerSum)?.to_normalized_p()?;
                    Ok(CheckRecord::equal(
                        name,
                        params,
                        &top,
                        &p.coeff(&Partition::single(n as u32)),
                    ))
                },
            ));
        }
    }
    tasks.push(check("abc_identities", json!({"i_max": 10}), |name, params| {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for i in 2..=10usize {
            let (a, b, c) = abc(i)?;
            let ii = i as i64;
            lhs.push([&(&a + &b) - &c, &a.shift(1) + &b, b.clone()]);
            rhs.push([
                t_quantum(ii),
                t_quantum(ii - 1).shift(1).scale_int(ii),
                reverse(&a, i),
            ]);
        }
        Ok(CheckRecord::equal(name, params, &lhs, &rhs))
    }));
    tasks
}

fn f_suite(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for v in FOUR {
        for n in 1..=cfg.max_n {
            tasks.push(check(
                "f_expansion",
                json!({"variant": v, "n": n}),
                move |name, params| {
                    let f = f_expansion(v, n)?;
                    let omega = closed_form(v, n)?.omega()?;
                    let pass = f.to_table(n) == expand_in_variables(&omega, n);
                    Ok(CheckRecord::new(name, params, pass, &f, &omega))
                },
            ));
        }
    }
    tasks
}

/// `Σ_σ t^{stat σ} C(m + |Des≥2(σ⁻¹)|, n)` over the variant's permutations.
fn counting_rhs(v: Variant, n: usize, m: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for sigma in permutations(n) {
        if v == Variant::Less && sigma[0] >= sigma[n - 1] {
            continue;
        }
        let s = perm_stats(&sigma);
        let set = perm_stats(&inverse(&sigma)).des2_set;
        let count = num_integer::binomial(
            num_bigint::BigInt::from(m + set.len()),
            num_bigint::BigInt::from(n),
        );
        let stat = if v == Variant::Tilde { s.cdes } else { s.des };
        out += &LaurentPoly::monomial(Rational::from_integer(count), stat as i64);
    }
    out
}

fn counting(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for v in [Variant::Plain, Variant::Less, Variant::Tilde] {
        for n in 1..=cfg.max_n {
            for m in 1..=cfg.max_m {
                tasks.push(check(
                    "counting",
                    json!({"variant": v, "n": n, "m": m}),
                    move |name, params| {
                        let lhs = brute_enumerator(v, n, m).total();
                        Ok(CheckRecord::equal(name, params, &lhs, &counting_rhs(v, n, m)))
                    },
                ));
            }
        }
    }
    tasks
}

fn qexp(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for n in 1..=cfg.max_order.min(7) {
        tasks.push(check("interpretations", json!({"n": n}), move |name, params| {
            Ok(CheckRecord::equal(
                name,
                params,
                &q_eulerian(QEulerian::MajExc, n)?,
                &q_eulerian(QEulerian::Des, n)?,
            ))
        }));
    }
    for which in ROOTS {
        for n in 1..=cfg.max_order {
            tasks.push(check(
                "q_exp_identity",
                json!({"family": which, "n": n}),
                move |name, params| {
                    let (lhs, rhs) = q_exp_identity(which, n)?;
                    Ok(CheckRecord::equal(name, params, &lhs, &rhs))
                },
            ));
            tasks.push(check(
                "q_at_one",
                json!({"family": which, "n": n}),
                move |name, params| {
                    let a_prev = eulerian(n as i64 - 1)?;
                    let want = match which {
                        QEulerian::Less => a_prev.shift(1).derivative(),
                        QEulerian::Tilde => a_prev.shift(1).scale_int(n as i64),
                        _ => eulerian(n as i64)?,
                    };
                    Ok(CheckRecord::equal(
                        name,
                        params,
                        &q_eulerian(which, n)?.at_q_one(),
                        &want,
                    ))
                },
            ));
        }
    }
    for (v, which) in [
        (Variant::Plain, QEulerian::Des),
        (Variant::Less, QEulerian::Less),
        (Variant::Tilde, QEulerian::Tilde),
    ] {
        for n in 1..=cfg.max_order {
            tasks.push(check(
                "principal_specialization",
                json!({"variant": v, "family": which, "n": n}),
                move |name, params| {
                    let numerator = f_expansion(v, n)?.principal_numerator();
                    Ok(CheckRecord::equal(
                        name,
                        params,
                        &numerator,
                        &q_eulerian(which, n)?,
                    ))
                },
            ));
        }
    }
    tasks
}

fn roots(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for which in ROOTS {
        for n in 2..=cfg.max_order {
            for k in (1..=n).filter(|k| n % k == 0) {
                tasks.push(check(
                    "root_of_unity",
                    json!({"family": which, "n": n, "k": k}),
                    move |name, params| {
                        let r = root_of_unity(which, n, k)?;
                        Ok(CheckRecord::new(name, params, r.holds(), &r, &r.closed))
                    },
                ));
            }
        }
    }
    tasks
}

fn transfer(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for k in 2..=cfg.max_k {
        tasks.push(check(
            "transfer_determinant",
            json!({"k": k, "order": k}),
            move |name, params| {
                let (lhs, rhs) = transfer_matrix_check(k, k)?;
                Ok(CheckRecord::equal(name, params, &lhs, &rhs))
            },
        ));
    }
    for j in 0..=5 {
        for k in 1..=6 {
            tasks.push(check(
                "distinguished_element",
                json!({"j": j, "k": k}),
                move |name, params| {
                    let (lhs, rhs) = distinguished_element_sides(j, k);
                    Ok(CheckRecord::equal(name, params, &lhs, &rhs))
                },
            ));
        }
    }
    tasks
}

/// `(palindromic, e-unimodal)` with palindromicity about `center`.
fn shape_flags(f: &SymFun, center: Center) -> Result<(bool, bool)> {
    let (pal, uni_each) = e_unimodal_palindromic(f, center)?;
    Ok((pal, uni_each && is_e_unimodal(f)?))
}

/// Center of symmetry as a function of `n`.
type CenterOf = fn(usize) -> Center;

fn unimodal(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    let families: [(Variant, CenterOf); 3] = [
        (Variant::Plain, |n| Center::half(n as i64 - 1)),
        (Variant::NotEqual, |n| Center::half(n as i64 - 1)),
        (Variant::TildeNotEqual, |n| Center::half(n as i64)),
    ];
    for (v, center) in families {
        for n in v.min_n().max(if v == Variant::Plain { 1 } else { 2 })..=cfg.max_order {
            tasks.push(check(
                "unimodal",
                json!({"variant": v, "n": n, "center": center(n)}),
                move |name, params| {
                    let flags = shape_flags(&closed_form(v, n)?, center(n))?;
                    Ok(CheckRecord::equal(name, params, &flags, &(true, true)))
                },
            ));
        }
    }
    for n in 2..=cfg.max_order {
        let center = Center::half(n as i64);
        tasks.push(check(
            "cycle_shape",
            json!({"n": n, "center": center}),
            move |name, params| {
                let f = closed_form(Variant::Cycle, n)?;
                let positive = e_positivity_report(&f)?.positive;
                let (pal, uni) = shape_flags(&f, center)?;
                if n % 2 == 1 {
                    return Ok(CheckRecord::equal(
                        name,
                        params,
                        &json!([positive, pal, uni]),
                        &json!([true, true, true]),
                    ));
                }
                let m = n / 2;
                let rect = Partition::rectangle(2, m);
                let witness = f.coeff(&rect);
                let want_witness = LaurentPoly::from_ints(m as i64 - 1, &[1, 0, 1]);
                let patched = f.add(&SymFun::term(
                    Basis::Elementary,
                    rect,
                    LaurentPoly::int_monomial(1, m as i64),
                ));
                let (ppal, puni) = shape_flags(&patched, center)?;
                Ok(CheckRecord::equal(
                    name,
                    params,
                    &json!([positive, pal, uni, witness, ppal, puni]),
                    &json!([true, true, false, want_witness, true, true]),
                ))
            },
        ));
    }
    if cfg.max_order >= 5 {
        tasks.push(check("tilde_not_unimodal", json!({"n": 5}), |name, params| {
            let f = closed_form(Variant::Tilde, 5)?;
            let flags = (is_t_palindromic(&f), is_e_unimodal(&f)?);
            Ok(CheckRecord::new(
                name,
                params,
                flags == (false, false),
                &flags,
                &(false, false),
            ))
        }));
    }
    for n in 2..=cfg.max_order {
        tasks.push(check(
            "tilde_special_coefficients",
            json!({"n": n}),
            move |name, params| {
                let f = closed_form(Variant::Tilde, n)?;
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                let mut shapes_ok = true;
                for lambda in partitions_of(n) {
                    let Some(want) = tilde_shape_coefficient(&lambda) else {
                        continue;
                    };
                    let got = f.coeff(&lambda);
                    if let Some(c) = natural_center(&got) {
                        shapes_ok &= palindrome_unimodal(&got, c) == (true, true);
                    }
                    lhs.push(json!({"partition": lambda, "coeff": got}));
                    rhs.push(json!({"partition": lambda, "coeff": want}));
                }
                Ok(CheckRecord::new(
                    name,
                    params,
                    shapes_ok && lhs == rhs,
                    &lhs,
                    &rhs,
                ))
            },
        ));
    }
    tasks
}

fn series(cfg: &VerifyConfig) -> Vec<Task> {
    let order = cfg.max_order.min(6);
    let mut tasks = Vec::new();
    for k in 1..=3u32 {
        tasks.push(check(
            "h_ratio_power",
            json!({"k": k, "order": order}),
            move |name, params| {
                let s = h_ratio_power(k, order)?;
                let mut lhs: Vec<MonomialTable> = Vec::new();
                let mut rhs: Vec<MonomialTable> = Vec::new();
                for n in 1..=order {
                    lhs.push(expand_in_variables(s.coeff(n), n));
                    rhs.push(expand_in_variables(&h_ratio_power_form(k as i64, n), n));
                }
                let pass = lhs == rhs && s.coeff(0) == &SymFun::one(Basis::Homogeneous);
                Ok(CheckRecord::new(
                    name,
                    params,
                    pass,
                    &s,
                    &(1..=order)
                        .map(|n| h_ratio_power_form(k as i64, n))
                        .collect::<Vec<_>>(),
                ))
            },
        ));
    }
    tasks.push(check(
        "stembridge",
        json!({"order": order}),
        move |name, params| {
            let (lhs, rhs) = super::powersum::stembridge_sides(order)?;
            Ok(CheckRecord::equal(name, params, &lhs, &rhs))
        },
    ));
    for v in FOUR {
        tasks.push(check(
            "cleared_form",
            json!({"variant": v, "order": cfg.max_order, "source": "closed"}),
            {
                let order = cfg.max_order;
                move |name, params| {
                    let id = cleared_form_check(v, order, SeriesSource::ClosedForm)?;
                    Ok(CheckRecord::equal(name, params, &id.lhs, &id.rhs))
                }
            },
        ));
        let brute_order = order.min(cfg.max_n);
        tasks.push(check(
            "cleared_form",
            json!({"variant": v, "order": brute_order, "source": "brute"}),
            move |name, params| {
                let id = cleared_form_check(v, brute_order, SeriesSource::BruteForce)?;
                Ok(CheckRecord::equal(name, params, &id.lhs, &id.rhs))
            },
        ));
    }
    for v in Variant::ALL {
        let brute_order = cfg.max_n;
        tasks.push(check(
            "denominator_form",
            json!({"variant": v, "order": brute_order, "source": "brute"}),
            move |name, params| {
                let id = denominator_form_check(v, brute_order, SeriesSource::BruteForce)?;
                Ok(CheckRecord::equal(name, params, &id.lhs, &id.rhs))
            },
        ));
    }
    tasks
}

fn tasks_for(suite: Suite, cfg: &VerifyConfig) -> Vec<Task> {
    match suite {
        Suite::All => Suite::MEMBERS.iter().flat_map(|&s| tasks_for(s, cfg)).collect(),
        Suite::Oracle => oracle(cfg),
        Suite::EPositivity => epos(cfg),
        Suite::PowerSum => powersum(cfg),
        Suite::F => f_suite(cfg),
        Suite::Counting => counting(cfg),
        Suite::QExp => qexp(cfg),
        Suite::Roots => roots(cfg),
        Suite::Transfer => transfer(cfg),
        Suite::Unimodal => unimodal(cfg),
        Suite::Series => series(cfg),
    }
}

/// Runs a suite; tasks are independent and run in parallel, records keep
/// task order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    cfg.validate()?;
    let tasks = tasks_for(suite, cfg);
    let run = || -> Vec<CheckRecord> {
        let chunks: Vec<Vec<CheckRecord>> = tasks.par_iter().map(|t| t()).collect();
        chunks.into_iter().flatten().collect()
    };
    let records = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::invalid("threads", e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(Report { records })
}
