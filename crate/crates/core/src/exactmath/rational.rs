//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the numerators of a family of integers-valued rationals.
pub fn integer_content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Compact textual form: `3`, `-5/6`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a` or `a/b` with optional sign.
pub fn parse_rational(src: &str) -> Option<Rational> {
    let src = src.trim();
    let (n, d) = match src.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (src, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

/// Largest integer not exceeding `q`.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}
