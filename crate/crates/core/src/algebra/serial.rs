//! Exact JSON encodings: scalars as `"p/q"` strings (`"p"` when `q = 1`),
//! polynomials as ascending arrays of those, rational functions as
//! `{"num": [...], "den": [...]}`.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::{Polynomial, RationalFunction, Scalar, TaylorPrefix};

fn parse_scalar<T: Scalar, E: de::Error>(s: &str) -> Result<T, E> {
    s.parse::<T>()
        .map_err(|_| E::custom(format!("invalid exact rational {s:?}")))
}

impl<T: Scalar> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs().iter().map(|c| c.to_string()))
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Polynomial<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_scalar(s))
            .collect::<Result<Vec<T>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl<T: Scalar> Serialize for RationalFunction<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RationalFunction", 2)?;
        st.serialize_field("num", self.num())?;
        st.serialize_field("den", self.den())?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(bound = "")]
struct RawFraction<T: Scalar> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<'de, T: Scalar> Deserialize<'de> for RationalFunction<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawFraction::<T>::deserialize(deserializer)?;
        RationalFunction::new(raw.num, raw.den).map_err(de::Error::custom)
    }
}

impl<T: Scalar> Serialize for TaylorPrefix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs().iter().map(|c| c.to_string()))
    }
}

impl<'de, T: Scalar> Deserialize<'de> for TaylorPrefix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_scalar(s))
            .collect::<Result<Vec<T>, _>>()?;
        Ok(TaylorPrefix::new(coeffs))
    }
}
