//! JSON form of big integers: a number when it fits in 64 bits, else a
//! decimal string.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Int(i64),
    Text(String),
}

pub(crate) fn to_value(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => v.into(),
        None => n.to_string().into(),
    }
}

fn from_raw<E: serde::de::Error>(raw: Raw) -> Result<BigInt, E> {
    match raw {
        Raw::Int(v) => Ok(v.into()),
        Raw::Text(s) => s.trim().parse().map_err(|_| E::custom(format!("not an integer: {s:?}"))),
    }
}

pub(crate) fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_value(n).serialize(s)
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    from_raw(Raw::deserialize(d)?)
}

pub(crate) mod vec {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_value).collect::<Vec<_>>().serialize(s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Raw>::deserialize(d)?.into_iter().map(from_raw::<D::Error>).collect()
    }
}
