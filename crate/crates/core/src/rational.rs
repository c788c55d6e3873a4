//! Exact rational arithmetic over Q.
//!
//! `Rational` is `num_rational::BigRational`: arbitrary-precision numerator,
//! positive denominator, always stored reduced. Those are exactly the
//! invariants the rest of the crate relies on, so we use the crate type
//! directly instead of wrapping it.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p", "-p" or "p/q" with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(format!("invalid rational {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| err())?;
        Ok(Rational::from_integer(n))
    }
}

/// "p" for integers, "p/q" otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fractional part in [0, 1): `r - floor(r)`.
pub fn fract_mod_one(r: &Rational) -> Rational {
    let f = r - r.floor();
    debug_assert!(!f.is_negative() && f < Rational::one());
    f
}
