//! Exact coefficient domains.
//!
//! Three fields are used throughout the crate: [`Rational`] for specialised
//! parameters, [`RatFunc`] for a single active spectral variable, and
//! [`TruncLaurent`] for the classical contraction `q = e^h`.  They share the
//! [`Scalar`] trait so that the algebra code is written once.

mod laurent;
mod params;
mod poly;
mod ratfunc;
mod rational;

pub use laurent::TruncLaurent;
pub use params::{default_q_nu, make_params, q_factorial, q_number, suggest_params, Couplings, ParamSet};
pub use poly::Poly;
pub use ratfunc::{RatFunc, DEFAULT_VAR};
pub use rational::{parse_rational, rat, rational_to_string, Rational};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_traits::{One, Zero};

use crate::error::Result;

/// A commutative field with exact (or precision-tracked) arithmetic.
pub trait Scalar:
    Zero
    + One
    + Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
    fn try_inv(&self) -> Result<Self>;

    /// Zero with nothing left to track; terms with such coefficients may be
    /// dropped from algebra elements.
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.try_inv()?)
    }

    fn from_int(k: i64) -> Self {
        Self::from_rational(&Rational::from_integer(k.into()))
    }

    fn pow_i(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        Ok(acc)
    }
}

/// Coefficients of algebra elements built over a structure-constant field `K`.
///
/// Structure constants live in `K`; element coefficients may live in a larger
/// field (for instance rational functions over the rationals).
pub trait ScalarOver<K: Scalar>: Scalar {
    fn lift(k: &K) -> Self;

    fn scale(&self, k: &K) -> Self {
        self.clone() * &Self::lift(k)
    }
}

impl<K: Scalar> ScalarOver<K> for K {
    fn lift(k: &K) -> Self {
        k.clone()
    }

    fn scale(&self, k: &K) -> Self {
        self.clone() * k
    }
}

impl ScalarOver<Rational> for RatFunc {
    fn lift(k: &Rational) -> Self {
        RatFunc::constant(k.clone())
    }

    fn scale(&self, k: &Rational) -> Self {
        self.scale_rational(k)
    }
}

impl ScalarOver<Rational> for TruncLaurent {
    fn lift(k: &Rational) -> Self {
        TruncLaurent::exact(0, vec![k.clone()])
    }
}
