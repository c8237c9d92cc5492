//! Exact scalars. Backed by `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `sign / l!` with `sign` in `{+1, -1}`.
pub fn signed_inverse_factorial(negative: bool, l: u32) -> Rational {
    let fact = (1..=l as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    let num = if negative {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    Rational::new(num, fact)
}

/// `num/den`, or just `num` when the denominator is 1.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den` (optionally signed).
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
