use crate::exact_algebra::{t_quantum, MPoly};
use crate::symfun::{expand_in_variables, Basis, MonomialTable, SymFun};
use crate::{Error, Result};

/// Variables are `x_1..x_k`, then `t`, then `z`.
fn t_var(k: usize) -> usize {
    k
}

fn z_var(k: usize) -> usize {
    k + 1
}

/// `I − zA` with `A_{ij} = x_j` for `i < j`, `t x_j` for `i > j`, zero on the diagonal.
pub fn transfer_matrix(k: usize) -> Vec<Vec<MPoly>> {
    let nv = k + 2;
    let z = MPoly::var(nv, z_var(k));
    let t = MPoly::var(nv, t_var(k));
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        return MPoly::one(nv);
                    }
                    let xj = MPoly::var(nv, j);
                    let entry = if i < j { xj } else { &t * &xj };
                    -&(&z * &entry)
                })
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let nv = m.first().map_or(0, |r| r.first().map_or(0, MPoly::nvars));
    if n == 0 {
        return MPoly::one(nv);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MPoly::zero(nv);
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a * &det_cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free elimination; every pivot must be nonzero.
pub fn det_bareiss(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let n = m.len();
    if n == 0 {
        return Err(Error::invalid("matrix", "empty matrix"));
    }
    let nv = m[0][0].nvars();
    let mut a: Vec<Vec<MPoly>> = m.to_vec();
    let mut prev = MPoly::one(nv);
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            return Err(Error::invalid("matrix", format!("zero pivot at {p}")));
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&a[p][p] * &a[i][j]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::invalid("matrix", "inexact Bareiss step"))?;
            }
        }
        prev = a[p][p].clone();
    }
    Ok(a[n - 1][n - 1].clone())
}

/// `det(I − zA)`: cofactor expansion for `k ≤ 4`, Bareiss beyond.
pub fn transfer_determinant(k: usize) -> Result<MPoly> {
    if k == 0 {
        return Ok(MPoly::one(2));
    }
    let m = transfer_matrix(k);
    if k <= 4 {
        Ok(det_cofactor(&m))
    } else {
        det_bareiss(&m)
    }
}

/// A `t`-free integer table as a polynomial in `x_1..x_k`, padded with
/// the `t` and `z` variables.
fn table_to_mpoly(table: &MonomialTable, nv: usize) -> MPoly {
    let mut out = MPoly::zero(nv);
    for (e, c) in table.terms() {
        for (texp, v) in c.terms() {
            let mut exps: Vec<u32> = e.iter().map(|&x| x as u32).collect();
            exps.resize(nv, 0);
            exps[table.nvars()] = texp as u32;
            out.add_term(exps, v.to_integer());
        }
    }
    out
}

/// `1 − Σ_{j=2}^{k} e_j(x_1..x_k) t[j−1]_t z^j`.
pub fn transfer_expected(k: usize) -> MPoly {
    let nv = k + 2;
    let mut out = MPoly::one(nv);
    for j in 2..=k {
        let ej = SymFun::generator(Basis::Elementary, j).scale(&t_quantum(j as i64 - 1).shift(1));
        let poly = table_to_mpoly(&expand_in_variables(&ej, k), nv);
        let zj = MPoly::var(nv, z_var(k)).pow(j as u32);
        out = &out - &(&poly * &zj);
    }
    out
}

/// Both sides of the determinant identity, truncated at `z^order`.
pub fn transfer_matrix_check(k: usize, order: usize) -> Result<(MPoly, MPoly)> {
    if !(1..=6).contains(&k) {
        return Err(Error::invalid("vars", format!("need 1 ≤ k ≤ 6, got {k}")));
    }
    if k == 1 {
        return Ok((MPoly::one(3), MPoly::one(3)));
    }
    let det = transfer_determinant(k)?;
    let z = z_var(k);
    Ok((
        det.truncate_in(z, order as u32),
        transfer_expected(k).truncate_in(z, order as u32),
    ))
}

/// `(Σ_i x_i e_j(x ∖ x_i), (j+1) e_{j+1})` in `k` variables.
pub fn distinguished_element_sides(j: usize, k: usize) -> (MonomialTable, MonomialTable) {
    let mut lhs = MonomialTable::new(k);
    if k >= 1 {
        let ej = if k == 1 {
            let mut empty = MonomialTable::new(0);
            if j == 0 {
                empty.add_term(Vec::new(), crate::exact_algebra::LaurentPoly::one());
            }
            empty
        } else {
            expand_in_variables(&SymFun::generator(Basis::Elementary, j), k - 1)
        };
        for i in 0..k {
            for (e, c) in ej.terms() {
                let mut exps = e.clone();
                exps.insert(i, 1);
                lhs.add_term(exps, c.clone());
            }
        }
    }
    let rhs = expand_in_variables(
        &SymFun::generator(Basis::Elementary, j + 1)
            .scale(&crate::exact_algebra::LaurentPoly::from_int(j as i64 + 1)),
        k,
    );
    (lhs, rhs)
}
