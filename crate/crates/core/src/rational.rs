//! Exact rationals and their canonical text form.
//!
//! Arithmetic is delegated to [`num_rational::BigRational`], which keeps every
//! value reduced with a positive denominator. This module only adds the
//! strict `"p/q"` text format used by every file and flag.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Canonical text form: `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_integer(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    // no leading zeros, no "-0"
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

/// Parses the canonical form produced by [`format_rational`].
///
/// Anything that is not already canonical is rejected: `"2/4"`, `"3/1"`,
/// `"1/-2"`, `"+1"`, `"007"`, `"0.5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |why: &str| Error::parse("$", format!("invalid rational {s:?}: {why}"));
    match s.split_once('/') {
        None => {
            let n = parse_integer(s, true).ok_or_else(|| bad("expected \"p\" or \"p/q\""))?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let num = parse_integer(p, true).ok_or_else(|| bad("malformed numerator"))?;
            let den = parse_integer(q, false).ok_or_else(|| bad("malformed denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            if den.is_one() {
                return Err(bad("denominator 1 must be omitted"));
            }
            let r = Rational::new(num.clone(), den.clone());
            if r.numer() != &num || r.denom() != &den {
                return Err(bad("not in lowest terms"));
            }
            Ok(r)
        }
    }
}

/// Bit length of numerator plus denominator; used as a pivot-size heuristic.
pub(crate) fn height(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}
