//! Serializes arbitrary-precision integers as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&v.to_string())
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::serialize(v, s),
            None => s.serialize_none(),
        }
    }
}
