//! JSON encoding of the exact types.
//!
//! A Laurent polynomial is an object from t-exponent (as a string, in
//! ascending numeric order) to its coefficient: an integer when integral and
//! `"p/q"` otherwise. A symmetric function is
//! `{"basis":"e","degree":5,"terms":[{"partition":[4,1],"coeff":{"1":1}}]}`,
//! with `"normalized"` added in the power-sum basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_algebra::{LaurentPoly, MPoly, QtPoly, Rational};
use crate::symfun::{Basis, MonomialTable, Partition, SymFun, SymSeries};

fn rational_to_value(c: &Rational) -> serde_json::Value {
    if c.is_integer() {
        if let Some(i) = c.to_integer().to_i64() {
            return serde_json::Value::from(i);
        }
        return serde_json::Value::from(c.to_integer().to_string());
    }
    serde_json::Value::from(format!("{}/{}", c.numer(), c.denom()))
}

fn parse_bigint(s: &str) -> Option<BigInt> {
    s.trim().parse().ok()
}

fn value_to_rational(v: &serde_json::Value) -> Option<Rational> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        serde_json::Value::String(s) => match s.split_once('/') {
            Some((p, q)) => {
                let (p, q) = (parse_bigint(p)?, parse_bigint(q)?);
                (!q.is_zero()).then(|| Rational::new(p, q))
            }
            None => parse_bigint(s).map(Rational::from_integer),
        },
        _ => None,
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &rational_to_value(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an object from t-exponent to coefficient")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, v)) = map.next_entry::<String, serde_json::Value>()? {
                    let e: i64 = k
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent '{k}'")))?;
                    let c = value_to_rational(&v)
                        .ok_or_else(|| de::Error::custom(format!("bad coefficient {v}")))?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        d.deserialize_map(PolyVisitor)
    }
}

impl Serialize for QtPoly {
    /// Object from q-exponent to a t-polynomial.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            map.serialize_entry(&e.to_string(), c)?;
        }
        map.end()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(de::Error::custom)
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for Basis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let sym = String::deserialize(d)?;
        Basis::from_symbol(&sym).ok_or_else(|| de::Error::custom(format!("unknown basis '{sym}'")))
    }
}

#[derive(Serialize)]
struct TermRef<'a> {
    partition: &'a Partition,
    coeff: &'a LaurentPoly,
}

#[derive(Deserialize)]
struct TermOwned {
    partition: Partition,
    coeff: LaurentPoly,
}

impl Serialize for SymFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let power_sum = self.basis() == Basis::PowerSum;
        let mut st = s.serialize_struct("SymFun", if power_sum { 4 } else { 3 })?;
        st.serialize_field("basis", &self.basis())?;
        st.serialize_field("degree", &self.degree())?;
        if power_sum {
            st.serialize_field("normalized", &self.is_normalized())?;
        }
        let terms: Vec<TermRef> = self
            .terms()
            .map(|(partition, coeff)| TermRef { partition, coeff })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            basis: Basis,
            degree: usize,
            #[serde(default)]
            normalized: bool,
            terms: Vec<TermOwned>,
        }
        let raw = Raw::deserialize(d)?;
        let mut f = if raw.basis == Basis::PowerSum && raw.normalized {
            SymFun::zero_normalized_p(raw.degree)
        } else {
            SymFun::zero(raw.basis, raw.degree)
        };
        for t in raw.terms {
            if t.partition.size() != raw.degree {
                return Err(de::Error::custom(format!(
                    "partition {} does not have size {}",
                    t.partition, raw.degree
                )));
            }
            f.add_term(t.partition, t.coeff);
        }
        Ok(f)
    }
}

#[derive(Serialize)]
struct MonomialRef<'a, C: Serialize> {
    exps: &'a [u8],
    coeff: C,
}

impl Serialize for MonomialTable {
    /// `{"vars":k,"terms":[{"exps":[..],"coeff":{..}}]}`, exponent vectors ascending.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<MonomialRef<&LaurentPoly>> = self
            .terms()
            .map(|(exps, coeff)| MonomialRef { exps, coeff })
            .collect();
        let mut st = s.serialize_struct("MonomialTable", 2)?;
        st.serialize_field("vars", &self.nvars())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl Serialize for SymSeries {
    /// The list of `z^n` coefficients from `n = 0`.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl Serialize for MPoly {
    /// `{"vars":k,"terms":[{"exps":[..],"coeff":c}]}`.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exps: &'a [u32],
            coeff: serde_json::Value,
        }
        let terms: Vec<Term> = self
            .terms()
            .map(|(exps, c)| Term {
                exps,
                coeff: rational_to_value(&Rational::from_integer(c.clone())),
            })
            .collect();
        let mut st = s.serialize_struct("MPoly", 2)?;
        st.serialize_field("vars", &self.nvars())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symfun_layout() {
        let f = SymFun::term(
            Basis::Elementary,
            Partition::new(vec![4, 1]).unwrap(),
            LaurentPoly::t(),
        );
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"basis":"e","degree":5,"terms":[{"partition":[4,1],"coeff":{"1":1}}]}"#
        );
    }

    #[test]
    fn exponents_in_numeric_order() {
        let mut p = LaurentPoly::from_ints(-2, &[1, 0, 3]);
        p.add_term(10, Rational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"-2":1,"0":3,"10":"1/2"}"#);
    }

    #[test]
    fn round_trip() {
        let mut f = SymFun::zero_normalized_p(3);
        f.add_term(
            Partition::new(vec![2, 1]).unwrap(),
            LaurentPoly::from_ints(-1, &[2, 0, -5]),
        );
        f.add_term(
            Partition::new(vec![3]).unwrap(),
            LaurentPoly::monomial(Rational::new((-7).into(), 3.into()), 4),
        );
        let text = serde_json::to_string(&f).unwrap();
        let back: SymFun = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"x":1}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"1":"1/0"}"#).is_err());
        assert!(serde_json::from_str::<SymFun>(
            r#"{"basis":"e","degree":3,"terms":[{"partition":[1,1],"coeff":{"0":1}}]}"#
        )
        .is_err());
    }
}
