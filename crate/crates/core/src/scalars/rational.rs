use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Scalar;
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// Shorthand constructor `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` (base 10, optional sign).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn try_inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
