//! JSON forms of the exact types.
//!
//! Rationals are decimal strings (`"3"`, `"-1/2"`) so values never pass
//! through floating point. Polynomials are ascending coefficient arrays.
//! Completion elements use `{"c0", "c", "level"}` with the integer
//! coefficients as plain JSON numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclo::{CompletionElem, NecklaceVector};
use crate::ghost::Ghost;
use crate::poly::Monic;
use crate::ring::MonicRatio;
use crate::scalar::{format_rational, parse_rational, Rational};

pub fn bigint_as_number<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => Err(S::Error::custom(format!(
            "integer {v} exceeds the JSON number range"
        ))),
    }
}

fn rationals_out<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

fn rationals_in<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|s| parse_rational(s).map_err(D::Error::custom))
        .collect()
}

impl Serialize for Monic<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rationals_out(self.coeffs(), s)
    }
}

impl<'de> Deserialize<'de> for Monic<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Monic::from_coeffs(rationals_in(d)?).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatioRepr {
    den: Monic<Rational>,
    num: Monic<Rational>,
}

impl Serialize for MonicRatio<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatioRepr {
            den: self.den().clone(),
            num: self.num().clone(),
        }
        .serialize(s)
    }
}

/// Accepts unreduced input and reduces it.
impl<'de> Deserialize<'de> for MonicRatio<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatioRepr::deserialize(d)?;
        Ok(MonicRatio::new(r.num, r.den))
    }
}

impl Serialize for Ghost<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rationals_out(self.values(), s)
    }
}

impl<'de> Deserialize<'de> for Ghost<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Ghost::new(rationals_in(d)?))
    }
}

impl Serialize for NecklaceVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rationals_out(self.values(), s)
    }
}

impl<'de> Deserialize<'de> for NecklaceVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(NecklaceVector::new(rationals_in(d)?))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompletionRepr {
    c0: i64,
    c: BTreeMap<String, i64>,
    level: Option<u64>,
}

impl Serialize for CompletionElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        use serde::ser::SerializeStruct;

        struct Coeffs<'a>(&'a BTreeMap<u64, BigInt>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                // numeric key order, not string order
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    let v = v.to_i64().ok_or_else(|| {
                        S::Error::custom(format!("coefficient {v} exceeds the JSON number range"))
                    })?;
                    m.serialize_entry(&k.to_string(), &v)?;
                }
                m.end()
            }
        }

        let c0 = self
            .c0()
            .to_i64()
            .ok_or_else(|| S::Error::custom("c0 exceeds the JSON number range"))?;
        let mut st = s.serialize_struct("CompletionElem", 3)?;
        st.serialize_field("c0", &c0)?;
        st.serialize_field("c", &Coeffs(self.coeffs()))?;
        st.serialize_field("level", &self.level())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CompletionElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CompletionRepr::deserialize(d)?;
        let mut c = BTreeMap::new();
        for (k, v) in r.c {
            let n: u64 = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad index {k:?}")))?;
            if v == 0 {
                return Err(D::Error::custom(format!("zero coefficient at index {n}")));
            }
            c.insert(n, BigInt::from(v));
        }
        CompletionElem::new(BigInt::from(r.c0), c, r.level).map_err(D::Error::custom)
    }
}

/// Compact JSON with a stable field order.
pub fn to_json<T: Serialize + ?Sized>(v: &T) -> crate::Result<String> {
    serde_json::to_string(v).map_err(|e| crate::Error::InvalidArgument(e.to_string()))
}
