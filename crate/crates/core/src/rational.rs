//! Exact rationals and their textual forms.
//!
//! Every quantity in this crate is a [`Rational`] backed by arbitrary
//! precision integers. Text forms accepted by [`parse_rational`]:
//!
//! * integers: `7`, `-3`
//! * finite decimals: `0.25`, `-1.5e2` (read digit by digit, never through `f64`)
//! * fractions: `3/4`, `-10/6`
//!
//! [`format_rational`] produces `p` or `p/q` in lowest terms, which
//! [`parse_rational`] reads back to the identical value.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `p/q` as a rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `2^k` as a rational.
pub fn pow2(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = || Error::ParseRational(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q <= BigInt::zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let numerator: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10u32);
    let magnitude = if scale >= 0 {
        Rational::from_integer(numerator * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numerator, num_traits::pow(ten, (-scale) as usize))
    };
    Some(if negative { -magnitude } else { magnitude })
}

/// Reads a rational from a JSON value: an integer, a decimal literal, or a
/// `"p/q"` string. Numbers are taken from their literal text (the crate
/// enables `serde_json/arbitrary_precision`), so `0.1` is exactly `1/10`.
pub fn rational_from_json(value: &serde_json::Value) -> Result<Rational> {
    match value {
        serde_json::Value::Number(num) => parse_rational(&num.to_string()),
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::ParseRational(other.to_string())),
    }
}

pub fn rational_to_json(x: &Rational) -> serde_json::Value {
    serde_json::Value::String(format_rational(x))
}
