//! Independent oracles: plain loops over words and permutations, sharing no
//! code with the library's enumerators.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use smirnov_core::exact_algebra::LaurentPoly;
use smirnov_core::symfun::MonomialTable;
use smirnov_core::Variant;

/// Exponent vector → (t-exponent → count).
pub type Table = BTreeMap<Vec<u8>, BTreeMap<i64, i64>>;

/// Every word in `[k]^n`, letters `0..k`.
pub fn all_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w = vec![0usize; n];
    loop {
        out.push(w.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            w[i] += 1;
            if w[i] < k {
                break;
            }
            w[i] = 0;
        }
    }
}

fn descents(w: &[usize]) -> i64 {
    w.windows(2).filter(|p| p[0] > p[1]).count() as i64
}

/// `Some(t-exponent)` when the word counts toward the variant.
pub fn weight(v: Variant, w: &[usize]) -> Option<i64> {
    let n = w.len();
    let adjacent_ok = w.windows(2).all(|p| p[0] != p[1]);
    if !adjacent_ok {
        return None;
    }
    let (first, last) = (w[0], w[n - 1]);
    let des = descents(w);
    let wrap = (last > first) as i64;
    match v {
        Variant::Plain => Some(des),
        Variant::Less => (first < last).then_some(des),
        Variant::Greater => (first > last).then_some(des),
        Variant::Equal => (first == last).then_some(des),
        Variant::NotEqual => (first != last).then_some(des),
        Variant::Tilde => Some(des + wrap),
        Variant::TildeNotEqual => (first != last).then_some(des + wrap),
        Variant::Cycle => {
            // labeled cycle: edges {i, i+1} and {1, n}; C_2 carries a double edge
            if n < 2 || first == last {
                return None;
            }
            let closing = (first > last) as i64;
            Some(if n == 2 { 2 * closing } else { des + closing })
        }
    }
}

pub fn brute(v: Variant, n: usize, k: usize) -> Table {
    let mut table = Table::new();
    for w in all_words(n, k) {
        if let Some(e) = weight(v, &w) {
            let mut exps = vec![0u8; k];
            for &a in &w {
                exps[a] += 1;
            }
            *table.entry(exps).or_default().entry(e).or_insert(0) += 1;
        }
    }
    table
}

pub fn table_of(m: &MonomialTable) -> Table {
    let mut out = Table::new();
    for (exps, c) in m.terms() {
        let row: BTreeMap<i64, i64> = c
            .terms()
            .map(|(e, v)| {
                assert!(v.is_integer(), "non-integral coefficient");
                (e, v.to_integer().to_i64().expect("fits"))
            })
            .collect();
        if !row.is_empty() {
            out.insert(exps.clone(), row);
        }
    }
    out
}

pub fn to_monomial_table(k: usize, table: &Table) -> MonomialTable {
    let mut out = MonomialTable::new(k);
    for (exps, row) in table {
        for (&e, &c) in row {
            out.add_term(exps.clone(), LaurentPoly::int_monomial(c, e));
        }
    }
    out
}

/// `Σ_{w} t^{stat w}` over all counted words.
pub fn total(table: &Table) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for row in table.values() {
        for (&e, &c) in row {
            *out.entry(e).or_insert(0) += c;
        }
    }
    out
}

/// All permutations of `1..=n` in one-line notation.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn inverse(s: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; s.len()];
    for (i, &v) in s.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

pub fn des(s: &[usize]) -> usize {
    s.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn cdes(s: &[usize]) -> usize {
    des(s) + (s[s.len() - 1] > s[0]) as usize
}

pub fn exc(s: &[usize]) -> usize {
    s.iter().enumerate().filter(|&(i, &v)| v > i + 1).count()
}

pub fn maj(s: &[usize]) -> usize {
    s.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Positions `i` with `s(i) − s(i+1) ≥ 2`.
pub fn drops_by_two(s: &[usize]) -> Vec<usize> {
    s.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] >= p[1] + 2)
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `[m]_t = 1 + t + … + t^{m−1}`, zero for `m ≤ 0`.
pub fn q(m: i64) -> LaurentPoly {
    LaurentPoly::from_ints(0, &vec![1; m.max(0) as usize])
}

pub fn poly(terms: &BTreeMap<i64, i64>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (&e, &c) in terms {
        p += &LaurentPoly::int_monomial(c, e);
    }
    p
}
