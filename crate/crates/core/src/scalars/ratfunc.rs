use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational, Scalar};
use crate::error::{Error, Result};

/// Default name of the active spectral variable.
pub const DEFAULT_VAR: char = 'u';

/// Univariate rational function with rational coefficients.
///
/// Always reduced: `gcd(num, den) = 1` and `den` is monic (so its leading
/// coefficient is positive).  Equal functions therefore have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    var: char,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn constant(c: Rational) -> Self {
        RatFunc {
            var: DEFAULT_VAR,
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    /// The variable itself.
    pub fn var(name: char) -> Self {
        RatFunc {
            var: name,
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(var: char, p: Poly) -> Self {
        RatFunc {
            var,
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds `num/den` and normalises it.
    pub fn new(var: char, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(var, num, den))
    }

    fn normalized(var: char, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                var,
                num,
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { var, num, den }
    }

    pub fn variable(&self) -> char {
        self.var
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.degree() == Some(0) {
            self.num.constant_value()
        } else {
            None
        }
    }

    fn joint_var(&self, other: &Self) -> char {
        match (self.is_constant(), other.is_constant()) {
            (true, _) => other.var,
            (_, true) => self.var,
            _ => {
                assert_eq!(
                    self.var, other.var,
                    "rational functions in different variables"
                );
                self.var
            }
        }
    }

    /// Fails if both operands are non-constant in different variables.
    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if !self.is_constant() && !other.is_constant() && self.var != other.var {
            Err(Error::VariableMismatch(self.var, other.var))
        } else {
            Ok(())
        }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return RatFunc {
                var: self.var,
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        RatFunc {
            var: self.var,
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    /// Exact value at `x`; fails if the reduced denominator vanishes there.
    pub fn evaluate_at(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluation(format!("{} = {}", self.var, x)));
        }
        Ok(self.num.eval(x) / d)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return self.num.fmt_var(f, self.var);
        }
        write!(f, "(")?;
        self.num.fmt_var(f, self.var)?;
        write!(f, ")/(")?;
        self.den.fmt_var(f, self.var)?;
        write!(f, ")")
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let var = self.joint_var(rhs);
        if rhs.num.is_zero() {
            return RatFunc { var, ..self };
        }
        if self.num.is_zero() {
            return RatFunc { var, ..rhs.clone() };
        }
        if self.den == rhs.den {
            return RatFunc::normalized(var, self.num.add(&rhs.num), self.den);
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RatFunc::normalized(var, num, self.den.mul(&rhs.den))
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        let var = self.joint_var(rhs);
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc {
                var,
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        if let Some(c) = rhs.constant_value() {
            return RatFunc {
                var,
                ..self.scale_rational(&c)
            };
        }
        if let Some(c) = self.constant_value() {
            return RatFunc {
                var,
                ..rhs.scale_rational(&c)
            };
        }
        // Cross-cancel so that the product is already reduced.
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let num = self.num.div_exact(&g1).mul(&rhs.num.div_exact(&g2));
        let den = self.den.div_exact(&g2).mul(&rhs.den.div_exact(&g1));
        let lead = den.leading().unwrap().recip();
        RatFunc {
            var,
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            var: self.var,
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::constant(Rational::one())
    }
}

impl Scalar for RatFunc {
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }

    fn try_inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(
            self.var,
            self.den.clone(),
            self.num.clone(),
        ))
    }
}
