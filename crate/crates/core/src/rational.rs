//! Exact rational numbers used for every length, height, work and time value.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serializer};

/// Arbitrary-precision rational. Denominators grow under Dijkstra-style
/// summation of mixed lengths, so fixed-width ratios are not used.
pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_count(count: usize) -> Rational {
    Rational::from_integer(BigInt::from(count))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

/// Error from [`parse`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational `{0}`")]
    Malformed(String),
}

/// Parses `"p"` or `"p/q"` with optional sign on `p`.
pub fn parse(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let malformed = || RationalParseError::Malformed(text.to_string());
    let numer = BigInt::from_str(numer).map_err(|_| malformed())?;
    let denom = BigInt::from_str(denom).map_err(|_| malformed())?;
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise (always reduced).
pub fn format(value: &Rational) -> String {
    value.to_string()
}

pub(crate) fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format(value))
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Lit {
        Int(i64),
        Text(String),
    }
    match Lit::deserialize(d)? {
        Lit::Int(v) => Ok(int(v)),
        Lit::Text(s) => parse(&s).map_err(de::Error::custom),
    }
}
