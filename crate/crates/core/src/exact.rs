//! Arbitrary-precision integers and rationals.
//!
//! [`ExactRat`] is `num_rational::BigRational`, which is normalized on
//! construction: the denominator is strictly positive and coprime with the
//! numerator, so structural equality is numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

pub fn int(n: impl Into<BigInt>) -> ExactInt {
    n.into()
}

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRat {
    BigRational::new(num.into(), den.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> ExactRat {
    BigRational::from_integer(n.into())
}

/// `n!` by iterated product.
pub fn factorial(n: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Nonnegative greatest common divisor. `gcd(0, 0)` is rejected.
pub fn gcd(a: &ExactInt, b: &ExactInt) -> Result<ExactInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("gcd(0, 0) is undefined"));
    }
    Ok(a.gcd(b))
}

/// `(-1)^k` as an integer.
pub fn sign(k: u64) -> ExactInt {
    if k % 2 == 0 {
        ExactInt::one()
    } else {
        -ExactInt::one()
    }
}

/// Integer value of a rational, if its denominator is 1.
pub fn as_integer(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn parse_int(s: &str) -> Result<ExactInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Result<ExactRat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(rat_int(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
    }
}

/// `"p/q"`, or `"p"` when the value is an integer.
pub fn format_rat(r: &ExactRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn to_u64(n: &ExactInt) -> Option<u64> {
    use num_traits::ToPrimitive;
    n.to_u64()
}

#[cfg(test)]
fn is_reduced(r: &ExactRat) -> bool {
    use num_traits::Signed;
    r.denom().is_positive() && r.numer().abs().gcd(r.denom()).is_one()
}
