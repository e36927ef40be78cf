use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{parse_rational, Rational, Scalar};
use crate::error::{Error, Result};

/// Relative order used when inverting an exact, non-monomial series.
pub const EXACT_INVERSE_ORDER: i64 = 32;

/// Laurent series in `h` with exact rational coefficients, known modulo
/// `h^prec`.
///
/// `coeffs[k]` is the coefficient of `h^(val + k)`.  The leading stored
/// coefficient is nonzero unless the series is zero, and nothing at or beyond
/// `h^prec` is ever stored.  `prec == None` marks an exactly known Laurent
/// polynomial.  The truncation order `N` of a value is `prec - val`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncLaurent {
    val: i64,
    coeffs: Vec<Rational>,
    prec: Option<i64>,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

impl TruncLaurent {
    fn build(val: i64, mut coeffs: Vec<Rational>, prec: Option<i64>) -> Self {
        if let Some(p) = prec {
            let keep = (p - val).max(0) as usize;
            coeffs.truncate(keep);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return TruncLaurent {
                val: prec.unwrap_or(0),
                coeffs: Vec::new(),
                prec,
            };
        }
        coeffs.drain(..lead);
        TruncLaurent {
            val: val + lead as i64,
            coeffs,
            prec,
        }
    }

    /// Exact Laurent polynomial `sum coeffs[k] h^(val+k)`.
    pub fn exact(val: i64, coeffs: Vec<Rational>) -> Self {
        Self::build(val, coeffs, None)
    }

    /// Series known modulo `h^(val + order)`.
    pub fn truncated(val: i64, coeffs: Vec<Rational>, order: usize) -> Self {
        Self::build(val, coeffs, Some(val + order as i64))
    }

    /// `exp(r h)` to `order` terms.
    pub fn exp_h(r: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = Rational::one();
        for k in 0..order {
            if k > 0 {
                term = term * r / Rational::from_integer((k as i64).into());
            }
            coeffs.push(term.clone());
        }
        Self::build(0, coeffs, Some(order as i64))
    }

    /// The monomial `h`.
    pub fn h() -> Self {
        Self::exact(1, vec![Rational::one()])
    }

    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    /// Number of coefficients known from the valuation on.
    pub fn order(&self) -> Option<i64> {
        self.prec.map(|p| p - self.val)
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn coeff(&self, degree: i64) -> Rational {
        let k = degree - self.val;
        if k < 0 {
            return Rational::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Valuation used for precision bookkeeping; zero series count as
    /// vanishing to their precision.
    fn effective_val(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            self.prec
        } else {
            Some(self.val)
        }
    }

    /// Multiplication by `h^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncLaurent {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
            prec: self.prec.map(|p| p + k),
        }
    }

    /// The coefficient of `h^0`.  Fails when the series has a genuine pole or
    /// when `h^0` lies beyond the known precision.
    pub fn constant_term(&self) -> Result<Rational> {
        if !self.coeffs.is_empty() && self.val < 0 {
            return Err(Error::NegativeValuation(self.val));
        }
        if let Some(p) = self.prec {
            if p <= 0 {
                return Err(Error::PrecisionExhausted(format!(
                    "known only modulo h^{p}"
                )));
            }
        }
        Ok(self.coeff(0))
    }

    pub fn invert(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::NonInvertible);
        }
        if self.prec.is_none() && self.coeffs.len() == 1 {
            return Ok(Self::exact(-self.val, vec![self.coeffs[0].recip()]));
        }
        let order = self.order().unwrap_or(EXACT_INVERSE_ORDER).max(1) as usize;
        let c0_inv = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(order);
        out.push(c0_inv.clone());
        for k in 1..order {
            let mut acc = Rational::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Self::build(-self.val, out, Some(-self.val + order as i64)))
    }

    pub fn to_json(&self) -> Value {
        let (n, coeffs): (i64, Vec<Value>) = match self.order() {
            Some(n) => (
                n.max(0),
                (0..n.max(0))
                    .map(|k| Value::String(self.coeff(self.val + k).to_string()))
                    .collect(),
            ),
            None => (
                self.coeffs.len() as i64,
                self.coeffs.iter().map(|c| Value::String(c.to_string())).collect(),
            ),
        };
        let mut v = json!({"val": self.val, "N": n, "coeffs": coeffs});
        if self.is_exact() {
            v["exact"] = Value::Bool(true);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad series JSON: {v}"));
        let val = v["val"].as_i64().ok_or_else(bad)?;
        let n = v["N"].as_i64().ok_or_else(bad)?;
        let coeffs = v["coeffs"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|c| c.as_str().ok_or_else(bad).and_then(parse_rational))
            .collect::<Result<Vec<_>>>()?;
        if v["exact"].as_bool().unwrap_or(false) {
            Ok(Self::exact(val, coeffs))
        } else {
            Ok(Self::truncated(val, coeffs, n.max(0) as usize))
        }
    }
}

impl fmt::Debug for TruncLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TruncLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.val + k as i64 {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})h")?,
                d => write!(f, "({c})h^{d}")?,
            }
        }
        match (first, self.prec) {
            (true, None) => write!(f, "0"),
            (true, Some(p)) => write!(f, "O(h^{p})"),
            (false, Some(p)) => write!(f, " + O(h^{p})"),
            (false, None) => Ok(()),
        }
    }
}

impl Add<&TruncLaurent> for TruncLaurent {
    type Output = TruncLaurent;
    fn add(self, rhs: &TruncLaurent) -> TruncLaurent {
        let prec = min_prec(self.prec, rhs.prec);
        if rhs.coeffs.is_empty() {
            return TruncLaurent::build(self.val, self.coeffs, prec);
        }
        if self.coeffs.is_empty() {
            return TruncLaurent::build(rhs.val, rhs.coeffs.clone(), prec);
        }
        let lo = self.val.min(rhs.val);
        let mut hi = (self.val + self.coeffs.len() as i64).max(rhs.val + rhs.coeffs.len() as i64);
        if let Some(p) = prec {
            hi = hi.min(p);
        }
        let coeffs = (lo..hi.max(lo))
            .map(|d| self.coeff(d) + rhs.coeff(d))
            .collect();
        TruncLaurent::build(lo, coeffs, prec)
    }
}

impl Neg for TruncLaurent {
    type Output = TruncLaurent;
    fn neg(self) -> TruncLaurent {
        TruncLaurent {
            val: self.val,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }
}

impl Sub<&TruncLaurent> for TruncLaurent {
    type Output = TruncLaurent;
    fn sub(self, rhs: &TruncLaurent) -> TruncLaurent {
        self + &(-rhs.clone())
    }
}

impl Mul<&TruncLaurent> for TruncLaurent {
    type Output = TruncLaurent;
    fn mul(self, rhs: &TruncLaurent) -> TruncLaurent {
        let exact_zero = |x: &TruncLaurent| x.coeffs.is_empty() && x.prec.is_none();
        if exact_zero(&self) || exact_zero(rhs) {
            return TruncLaurent::exact(0, Vec::new());
        }
        let ea = self.effective_val().unwrap();
        let eb = rhs.effective_val().unwrap();
        let prec = min_prec(self.prec.map(|p| p + eb), rhs.prec.map(|p| p + ea));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return TruncLaurent::build(ea + eb, Vec::new(), prec);
        }
        let val = self.val + rhs.val;
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(p) = prec {
            len = len.min((p - val).max(0) as usize);
        }
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncLaurent::build(val, coeffs, prec)
    }
}

impl Add for TruncLaurent {
    type Output = TruncLaurent;
    fn add(self, rhs: TruncLaurent) -> TruncLaurent {
        self + &rhs
    }
}

impl Sub for TruncLaurent {
    type Output = TruncLaurent;
    fn sub(self, rhs: TruncLaurent) -> TruncLaurent {
        self - &rhs
    }
}

impl Mul for TruncLaurent {
    type Output = TruncLaurent;
    fn mul(self, rhs: TruncLaurent) -> TruncLaurent {
        self * &rhs
    }
}

impl Zero for TruncLaurent {
    fn zero() -> Self {
        TruncLaurent::exact(0, Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TruncLaurent {
    fn one() -> Self {
        TruncLaurent::exact(0, vec![Rational::one()])
    }
}

impl Scalar for TruncLaurent {
    fn from_rational(r: &Rational) -> Self {
        TruncLaurent::exact(0, vec![r.clone()])
    }

    fn try_inv(&self) -> Result<Self> {
        self.invert()
    }

    fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }
}
