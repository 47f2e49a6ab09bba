//! Exact rationals.
//!
//! `Rational` is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p` or `p/q` with optional sign. Decimal points and exponents are
/// rejected so that every value entering the library is exact.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let digits = |s: &str, allow_sign: bool| {
        let body = if allow_sign {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let numer: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) if digits(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Nearest `f64`; saturates to ±inf for out-of-range values.
pub fn to_f64(value: &Rational) -> f64 {
    if let Some(f) = value.to_f64() {
        return f;
    }
    if value.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    }
}

/// The exact rational value of a finite float.
pub fn from_f64(value: f64) -> Option<Rational> {
    Rational::from_float(value)
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::lcm(a, b)
}
