//! Exact rational numbers and their text forms.
//!
//! Payoffs, probabilities and values are all [`Rational`]. The canonical text
//! form is `"p"` for integers and `"p/q"` otherwise, always in lowest terms
//! with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Why a rational literal was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("empty literal")]
    Empty,
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed fraction {0:?}")]
    Malformed(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed, none inside).
pub fn parse(literal: &str) -> Result<Rational, RationalParseError> {
    let s = literal.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let malformed = || RationalParseError::Malformed(literal.to_string());
    match s.split_once('/') {
        None => parse_int(s).map(Rational::from_integer).ok_or_else(malformed),
        Some((n, d)) => {
            let n = parse_int(n).ok_or_else(malformed)?;
            if d.starts_with(['-', '+']) {
                return Err(malformed());
            }
            let d = parse_int(d).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(literal.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical `"p"` / `"p/q"` rendering.
pub fn to_exact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rounds half away from zero to `places` decimals and renders without
/// exponent. `places == 0` yields an integer string.
pub fn to_decimal(r: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().abs().div_rem(scaled.denom());
    let twice = rem * 2u32;
    let rounded = if twice >= *scaled.denom() { q + 1u32 } else { q };
    let negative = r.is_negative() && !rounded.is_zero();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac_part.to_string(), width = places));
    }
    out
}

/// Decimal rendering with trailing zeros (and a dangling point) removed.
pub fn to_short_decimal(r: &Rational, places: usize) -> String {
    let s = to_decimal(r, places);
    if !s.contains('.') {
        return s;
    }
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Lossy conversion for display and plotting; never used in decisions.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn min_of<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values.into_iter().min().cloned()
}

pub fn max_of<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values.into_iter().max().cloned()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Serde adapter storing a rational as its canonical string.
pub mod serde_exact {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_exact(r))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Literal {
        Text(String),
        Integer(i64),
    }

    /// Accepts `"p/q"` strings and plain JSON integers.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        match Literal::deserialize(d)? {
            Literal::Text(s) => parse(&s).map_err(serde::de::Error::custom),
            Literal::Integer(n) => Ok(int(n)),
        }
    }
}

/// Serde adapter for a per-player pair of rationals.
pub mod serde_exact_pair {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrapped(#[serde(with = "super::serde_exact")] Rational);

    pub fn serialize<S: Serializer>(r: &[Rational; 2], s: S) -> Result<S::Ok, S::Error> {
        [Wrapped(r[0].clone()), Wrapped(r[1].clone())].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 2], D::Error> {
        let [Wrapped(a), Wrapped(b)] = <[Wrapped; 2]>::deserialize(d)?;
        Ok([a, b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse(" 10/4 ").unwrap(), frac(5, 2));
        assert_eq!(parse("+2").unwrap(), int(2));
    }

    #[test]
    fn rejects_bad_literals() {
        assert_eq!(parse("3/0"), Err(RationalParseError::ZeroDenominator("3/0".into())));
        for bad in ["", "1/", "/2", "1.5", "a", "1/2/3", "1/-2", "- 1", "1 /2"] {
            assert!(parse(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn renders_exact_and_decimal() {
        assert_eq!(to_exact(&frac(22, 4)), "11/2");
        assert_eq!(to_exact(&int(-4)), "-4");
        assert_eq!(to_decimal(&frac(761, 128), 2), "5.95");
        assert_eq!(to_decimal(&frac(1, 8), 2), "0.13");
        assert_eq!(to_decimal(&frac(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal(&frac(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&int(100), 2), "100.00");
        assert_eq!(to_short_decimal(&frac(23, 4), 6), "5.75");
        assert_eq!(to_short_decimal(&int(12), 2), "12");
        assert_eq!(to_short_decimal(&frac(2, 3), 4), "0.6667");
    }
}
