//! Serde adaptors that keep big integers as exact decimal strings in JSON.
//!
//! JSON numbers are limited to f64 range in many consumers, so every field
//! that can outgrow 2^53 is written as a quoted decimal string instead.

/// `BigUint` as a decimal string.
pub mod biguint_str {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        BigUint::from_str(&raw).map_err(de::Error::custom)
    }
}

/// `BigInt` as a decimal string.
pub mod bigint_str {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let raw = String::deserialize(d)?;
        BigInt::from_str(&raw).map_err(de::Error::custom)
    }
}

/// `Option<Vec<(BigUint, u32)>>` with the primes as decimal strings.
pub mod opt_factor_list {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        v: &Option<Vec<(BigUint, u32)>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        match v {
            Some(list) => super::factor_list::serialize(list, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Vec<(BigUint, u32)>>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::factor_list")] Vec<(BigUint, u32)>);
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

/// `Vec<(BigUint, u32)>` with the primes as decimal strings.
pub mod factor_list {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &[(BigUint, u32)], s: S) -> Result<S::Ok, S::Error> {
        let as_strings: Vec<(String, u32)> =
            v.iter().map(|(p, e)| (p.to_string(), *e)).collect();
        as_strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(BigUint, u32)>, D::Error> {
        let raw = Vec::<(String, u32)>::deserialize(d)?;
        raw.into_iter()
            .map(|(p, e)| BigUint::from_str(&p).map(|p| (p, e)).map_err(de::Error::custom))
            .collect()
    }
}
