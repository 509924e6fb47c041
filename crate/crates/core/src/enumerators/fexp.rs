use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{fundamental_f, inverse, perm_stats, permutations, Positions};
use crate::exact_algebra::{rat, LaurentPoly, QtPoly};
use crate::symfun::MonomialTable;
use crate::{Error, Result, Variant};

/// `Σ mult · t^e F_{n,S}`, aggregated by `(e, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FExpansion {
    degree: usize,
    terms: BTreeMap<(i64, Positions), u64>,
}

#[derive(Serialize)]
struct FTerm {
    t: i64,
    set: Positions,
    mult: u64,
}

impl FExpansion {
    pub fn new(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, t_exp: i64, s: Positions, mult: u64) {
        if mult > 0 {
            *self.terms.entry((t_exp, s)).or_insert(0) += mult;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Positions, u64)> + '_ {
        self.terms.iter().map(|(&(e, s), &m)| (e, s, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult t^e F_{n,S}(x_1..x_k)`.
    pub fn to_table(&self, k: usize) -> MonomialTable {
        let mut out = MonomialTable::new(k);
        let mut by_set: BTreeMap<Positions, LaurentPoly> = BTreeMap::new();
        for (e, s, m) in self.terms() {
            let slot = by_set.entry(s).or_default();
            *slot += &LaurentPoly::monomial(rat(m as i64), e);
        }
        for (s, c) in by_set {
            out = out.add(&fundamental_f(self.degree, s, k).scale(&c));
        }
        out
    }

    /// `Σ mult t^e q^{ΣS}`: the numerator of the stable principal
    /// specialization over `Π_{j≤n} (1 − q^j)`.
    pub fn principal_numerator(&self) -> QtPoly {
        self.terms()
            .map(|(e, s, m)| QtPoly::monomial(LaurentPoly::monomial(rat(m as i64), e), s.sum() as u32))
            .sum()
    }

    /// `Σ mult t^e C(m + n − 1 − |S|, n)`.
    pub fn ones_specialization(&self, m: usize) -> LaurentPoly {
        self.terms()
            .map(|(e, s, mult)| {
                let count = crate::combinatorics::f_ones_specialization(self.degree, s, m);
                LaurentPoly::monomial(crate::exact_algebra::Rational::from_integer(count * mult), e)
            })
            .sum()
    }
}

impl fmt::Display for FExpansion {
    /// One `t^e F{S}: mult` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, s, m)) in self.terms().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "t^{e} F{s}: {m}")?;
        }
        Ok(())
    }
}

impl Serialize for FExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<FTerm> = self
            .terms()
            .map(|(t, set, mult)| FTerm { t, set, mult })
            .collect();
        let mut st = s.serialize_struct("FExpansion", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The fundamental quasisymmetric expansion of `ω V_n`:
///
/// * `W`:  `Σ_σ t^{des σ} F_{Des≥2(σ⁻¹)}`
/// * `W<`: the same over `σ(1) < σ(n)`
/// * `W>`: `Σ_{σ(1) > σ(n)} t^{des σ} F_{Asc≥2(σ⁻¹)}`
/// * `W̃`:  `Σ_σ t^{cdes σ} F_{Des≥2(σ⁻¹)}`
pub fn f_expansion(v: Variant, n: usize) -> Result<FExpansion> {
    if !(1..=10).contains(&n) {
        return Err(Error::invalid("n", format!("need 1 ≤ n ≤ 10, got {n}")));
    }
    let mut out = FExpansion::new(n);
    for sigma in permutations(n) {
        let (first, last) = (sigma[0], sigma[n - 1]);
        let keep = match v {
            Variant::Plain | Variant::Tilde => true,
            Variant::Less => first < last,
            Variant::Greater => first > last,
            other => {
                return Err(Error::invalid(
                    "variant",
                    format!("no F-expansion for {other}; use W, Wless, Wgreater or Wtilde"),
                ))
            }
        };
        if !keep {
            continue;
        }
        let s = perm_stats(&sigma);
        let inv = perm_stats(&inverse(&sigma));
        let (stat, set) = match v {
            Variant::Tilde => (s.cdes, inv.des2_set),
            Variant::Greater => (s.des, inv.asc2_set),
            _ => (s.des, inv.des2_set),
        };
        out.add(stat as i64, set, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: &[usize]) -> Positions {
        Positions::from_slice(p)
    }

    #[test]
    fn tilde_n3() {
        let f = f_expansion(Variant::Tilde, 3).unwrap();
        let mut want = FExpansion::new(3);
        want.add(1, set(&[]), 1);
        want.add(1, set(&[1]), 1);
        want.add(1, set(&[2]), 1);
        want.add(2, set(&[]), 3);
        assert_eq!(f, want);
    }

    #[test]
    fn less_n2_and_plain_n1() {
        let mut want = FExpansion::new(2);
        want.add(0, set(&[]), 1);
        assert_eq!(f_expansion(Variant::Less, 2).unwrap(), want);
        let mut want = FExpansion::new(1);
        want.add(0, set(&[]), 1);
        assert_eq!(f_expansion(Variant::Plain, 1).unwrap(), want);
    }

    #[test]
    fn rejects_other_variants() {
        assert!(f_expansion(Variant::Equal, 3).is_err());
    }
}
