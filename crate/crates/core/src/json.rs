//! Big integers on the wire as plain JSON numbers.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

fn number<S: Serializer>(digits: String, s: S) -> Result<S::Ok, S::Error> {
    Number::from_str(&digits)
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

pub fn big_uint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    number(v.to_string(), s)
}

pub fn big_uint_de<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let n = Number::deserialize(d)?;
    BigUint::from_str(&n.to_string()).map_err(serde::de::Error::custom)
}

/// A JSON number holding an exact integer.
pub fn to_value(v: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}
