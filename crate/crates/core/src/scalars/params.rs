use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, Rational, Scalar};
use crate::error::{Error, Result};

/// Certified rational parameters of `BMW_n(q, nu)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    #[serde(with = "rational_str")]
    pub q: Rational,
    #[serde(with = "rational_str")]
    pub nu: Rational,
    /// `c = -1/(q nu)`.
    #[serde(with = "rational_str")]
    pub c: Rational,
    /// `mu = (q - 1/q + 1/nu - nu)/(q - 1/q)`, so that `kappa^2 = mu kappa`.
    #[serde(with = "rational_str")]
    pub mu: Rational,
    pub certified_n: usize,
}

pub(crate) mod rational_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::scalars::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

impl ParamSet {
    /// Parameters after `q -> -1/q`, which relabels the same algebra.
    pub fn starred(&self) -> Result<ParamSet> {
        make_params(-self.q.recip(), self.nu.clone(), self.certified_n)
    }

    pub fn couplings(&self) -> Couplings<Rational> {
        Couplings {
            q: self.q.clone(),
            nu: self.nu.clone(),
            qdiff: &self.q - self.q.recip(),
            mu: self.mu.clone(),
            c: self.c.clone(),
        }
    }

    /// Quantum content `q^(2m)`.
    pub fn q2(&self, m: i64) -> Rational {
        self.q.pow_i(2 * m).expect("q is nonzero")
    }

    /// Quantum content `nu^2 q^(2m)`.
    pub fn nu2q2(&self, m: i64) -> Rational {
        &self.nu * &self.nu * self.q2(m)
    }
}

/// The derived constants of the defining relations, over any scalar field.
#[derive(Clone, Debug, PartialEq)]
pub struct Couplings<K> {
    pub q: K,
    pub nu: K,
    /// `q - q^{-1}`.
    pub qdiff: K,
    pub mu: K,
    pub c: K,
}

impl<K: Scalar> Couplings<K> {
    pub fn from_q_nu(q: K, nu: K) -> Result<Self> {
        let q_inv = q.try_inv()?;
        let nu_inv = nu.try_inv()?;
        let qdiff = q.clone() - &q_inv;
        let mu = (qdiff.clone() + &nu_inv - &nu).try_div(&qdiff)?;
        let c = -(q_inv * &nu_inv);
        Ok(Couplings {
            q,
            nu,
            qdiff,
            mu,
            c,
        })
    }

    pub fn lift<S: super::ScalarOver<K>>(&self) -> Couplings<S> {
        Couplings {
            q: S::lift(&self.q),
            nu: S::lift(&self.nu),
            qdiff: S::lift(&self.qdiff),
            mu: S::lift(&self.mu),
            c: S::lift(&self.c),
        }
    }

    /// Same couplings with `c` replaced (the Hecke family uses a free `c`).
    pub fn with_c(&self, c: K) -> Self {
        Couplings { c, ..self.clone() }
    }
}

/// Builds and certifies parameters for `BMW_n`.
///
/// The checklist, in order: (a) `q^k != 1` for `1 <= k <= 4n+4`; (b) the
/// candidate contents `q^{2m}`, `nu^2 q^{2m}` (`|m| <= n`) are pairwise
/// distinct; (c) `c x y != 1` for all candidate contents `x, y`;
/// (d) `nu != q^{1-k}` for `|k| <= 2n`.
pub fn make_params(q: Rational, nu: Rational, n: usize) -> Result<ParamSet> {
    if q.is_zero() {
        return Err(Error::NotGeneric("q = 0".into()));
    }
    if nu.is_zero() {
        return Err(Error::NotGeneric("nu = 0".into()));
    }
    if q == Rational::one() || q == -Rational::one() {
        return Err(Error::NotGeneric("q - 1/q = 0".into()));
    }
    let n_i = n as i64;
    for k in 1..=(4 * n_i + 4) {
        if q.pow_i(k)?.is_one() {
            return Err(Error::NotGeneric(format!("q^{k} = 1")));
        }
    }
    let qdiff = &q - q.recip();
    let mu = (&qdiff + nu.recip() - &nu) / &qdiff;
    let c = -(&q * &nu).recip();
    let params = ParamSet {
        q: q.clone(),
        nu: nu.clone(),
        c: c.clone(),
        mu,
        certified_n: n,
    };

    let mut contents: Vec<(String, Rational)> = Vec::new();
    for m in -n_i..=n_i {
        contents.push((format!("q^{}", 2 * m), params.q2(m)));
    }
    for m in -n_i..=n_i {
        contents.push((format!("nu^2 q^{}", 2 * m), params.nu2q2(m)));
    }
    for i in 0..contents.len() {
        for j in (i + 1)..contents.len() {
            if contents[i].1 == contents[j].1 {
                return Err(Error::NotGeneric(format!(
                    "content collision {} = {}",
                    contents[i].0, contents[j].0
                )));
            }
        }
    }
    for (nx, x) in &contents {
        for (ny, y) in &contents {
            if (&c * x * y).is_one() {
                return Err(Error::NotGeneric(format!("c ({nx}) ({ny}) = 1")));
            }
        }
    }
    for k in -(2 * n_i)..=(2 * n_i) {
        if nu == q.pow_i(1 - k)? {
            return Err(Error::NotGeneric(format!("nu = q^{}", 1 - k)));
        }
    }
    Ok(params)
}

/// `k_q = (q^k - q^{-k})/(q - q^{-1})`.
pub fn q_number(k: u32, q: &Rational) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::NotGeneric("q = 0".into()));
    }
    // Sum form q^{k-1} + q^{k-3} + ... + q^{1-k}, valid also at q = +-1.
    let mut acc = Rational::zero();
    let k = k as i64;
    for j in 0..k {
        acc += q.pow_i(k - 1 - 2 * j)?;
    }
    Ok(acc)
}

/// `k_q! = 2_q 3_q ... k_q`, with `0_q! = 1_q! = 1`.
pub fn q_factorial(k: u32, q: &Rational) -> Result<Rational> {
    let mut acc = Rational::one();
    for j in 2..=k {
        acc *= q_number(j, q)?;
    }
    Ok(acc)
}

/// Default parameters with small numerators.
pub fn default_q_nu() -> (Rational, Rational) {
    (rat(6, 5), rat(7, 3))
}

/// The first certified pair in a fixed list of small fractions, starting
/// with the defaults.
pub fn suggest_params(n: usize) -> Result<ParamSet> {
    let qs = [(6, 5), (5, 4), (7, 5), (4, 3), (3, 2), (8, 5), (5, 3), (7, 4), (9, 5), (2, 1)];
    let nus = [(7, 3), (5, 2), (8, 3), (9, 4), (11, 3), (13, 4), (17, 5), (19, 7), (23, 6), (29, 9)];
    let mut last = Error::NotGeneric(format!("no candidate certified for n = {n}"));
    for &(a, b) in &qs {
        for &(c, d) in &nus {
            match make_params(rat(a, b), rat(c, d), n) {
                Ok(p) => return Ok(p),
                Err(e) => last = e,
            }
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants() {
        let p = make_params(rat(2, 1), rat(3, 1), 2).unwrap();
        assert_eq!(p.mu, rat(-7, 9));
        assert_eq!(p.c, rat(-1, 6));
    }

    #[test]
    fn rejects_q_one() {
        assert!(matches!(
            make_params(rat(1, 1), rat(3, 1), 2),
            Err(Error::NotGeneric(_))
        ));
    }

    #[test]
    fn rejects_content_collision() {
        match make_params(rat(2, 1), rat(4, 1), 2) {
            Err(Error::NotGeneric(msg)) => assert!(msg.contains("collision"), "{msg}"),
            other => panic!("expected NOT_GENERIC, got {other:?}"),
        }
    }

    #[test]
    fn q_numbers() {
        let q = rat(2, 1);
        assert_eq!(q_number(1, &q).unwrap(), rat(1, 1));
        assert_eq!(q_number(2, &q).unwrap(), rat(5, 2));
        assert_eq!(q_factorial(3, &q).unwrap(), rat(105, 8));
        assert_eq!(q_factorial(0, &q).unwrap(), rat(1, 1));
        assert_eq!(q_number(0, &q).unwrap(), rat(0, 1));
    }

    #[test]
    fn defaults_are_certified_up_to_cap() {
        let (q, nu) = default_q_nu();
        assert!(make_params(q, nu, 6).is_ok());
    }

    #[test]
    fn generic_couplings_agree_with_param_set() {
        let p = make_params(rat(6, 5), rat(7, 3), 3).unwrap();
        let c = Couplings::from_q_nu(p.q.clone(), p.nu.clone()).unwrap();
        assert_eq!(c, p.couplings());
    }
}
