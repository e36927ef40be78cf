use crate::bmw::{Context, Element};
use crate::error::{Error, Result};
use crate::scalars::{Couplings, Rational, Scalar, ScalarOver};

/// `a + b T_i + c K_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Linear<S> {
    pub i: usize,
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> Linear<S> {
    pub fn to_element<K: Scalar>(&self, ctx: &Context<K>) -> Result<Element<S>>
    where
        S: ScalarOver<K>,
    {
        ctx.linear(self.i, self.a.clone(), self.b.clone(), self.c.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Linear {
            i: self.i,
            a: self.a.clone() * k,
            b: self.b.clone() * k,
            c: self.c.clone() * k,
        }
    }
}

/// `x * l`.
pub fn mul_right<K: Scalar, S: ScalarOver<K>>(ctx: &Context<K>, x: &Element<S>, l: &Linear<S>) -> Element<S> {
    ctx.mul_linear(x, l.i, &l.a, &l.b, &l.c)
}

/// `l * x`, through the anti-automorphism (which fixes `T_i` and `K_i`).
pub fn mul_left<K: Scalar, S: ScalarOver<K>>(ctx: &Context<K>, l: &Linear<S>, x: &Element<S>) -> Element<S> {
    ctx.rho(&ctx.mul_linear(&ctx.rho(x), l.i, &l.a, &l.b, &l.c))
}

fn pole(what: &str) -> Error {
    Error::Pole(what.to_string())
}

fn div<S: Scalar>(a: &S, b: &S, what: &str) -> Result<S> {
    if b.is_exact_zero() {
        return Err(pole(what));
    }
    if b.is_zero() {
        return Err(Error::PrecisionExhausted(what.to_string()));
    }
    a.try_div(b)
}

/// Baxterized elements built from one set of couplings.  The starred set is
/// obtained from the couplings at `q -> -1/q`; the algebra is unchanged.
#[derive(Clone, Debug)]
pub struct Baxter<K: Scalar = Rational> {
    pub cp: Couplings<K>,
}

impl Baxter<Rational> {
    /// The couplings of a rational context.
    pub fn of(ctx: &Context<Rational>) -> Self {
        Baxter::new(ctx.params().couplings())
    }

    /// Same algebra, `q -> -1/q` in the scalar coefficients.
    pub fn starred(ctx: &Context<Rational>) -> Result<Self> {
        let p = ctx.params();
        Ok(Baxter::new(Couplings::from_q_nu(-p.q.recip(), p.nu.clone())?))
    }

}

impl<K: Scalar> Baxter<K> {
    pub fn new(cp: Couplings<K>) -> Self {
        Baxter { cp }
    }

    pub fn with_c(&self, c: K) -> Self {
        Baxter::new(self.cp.with_c(c))
    }

    fn lift<S: ScalarOver<K>>(&self, r: &K) -> S {
        S::lift(r)
    }

    /// `T_i(u, v) = T_i + d/(v/u - 1) + d/(1 + nu^{-1} q v/u) K_i`.
    pub fn t<S: ScalarOver<K>>(&self, i: usize, u: &S, v: &S) -> Result<Linear<S>> {
        let d: S = self.lift(&self.cp.qdiff);
        let ratio = div(v, u, "T(u,v) with u = 0")?;
        let a = div(&d, &(ratio.clone() - &S::one()), "T(u,v) at v = u")?;
        let qn: S = self.lift(&self.cp.q.try_div(&self.cp.nu)?);
        let c = div(&d, &(S::one() + &(qn * &ratio)), "T(u,v) at 1 + q v/(nu u) = 0")?;
        Ok(Linear { i, a, b: S::one(), c })
    }

    /// `T_i(x) = T_i(x, 1)`.
    pub fn t1<S: ScalarOver<K>>(&self, i: usize, x: &S) -> Result<Linear<S>> {
        self.t(i, x, &S::one())
    }

    /// `f(u, v) = (u - v)^2 / ((u - q^2 v)(u - q^{-2} v))`.
    pub fn f<S: ScalarOver<K>>(&self, u: &S, v: &S) -> Result<S> {
        let q2k = self.cp.q.clone() * &self.cp.q;
        let qm2: S = self.lift(&q2k.try_inv()?);
        let q2: S = self.lift(&q2k);
        let diff = u.clone() - v;
        let den = (u.clone() - &(q2 * v)) * &(u.clone() - &(qm2 * v));
        div(&(diff.clone() * &diff), &den, "f(u,v) at u = q^(+-2) v")
    }

    /// `T_i(v, u)^{-1}`, realized as `T_i(u, v) f(u, v)`.
    pub fn t_inverse<S: ScalarOver<K>>(&self, i: usize, v: &S, u: &S) -> Result<Linear<S>> {
        let f = self.f(u, v)?;
        Ok(self.t(i, u, v)?.scale(&f))
    }

    /// `Q_i(u, v; c) = T_i(1/(c u v))`.
    pub fn q<S: ScalarOver<K>>(&self, i: usize, u: &S, v: &S) -> Result<Linear<S>> {
        let c: S = self.lift(&self.cp.c);
        let x = div(&S::one(), &(c * u * v), "Q(u,v) with c u v = 0")?;
        self.t1(i, &x)
    }

    /// `(c u - 1)/(u - 1)`, the first boundary factor.
    pub fn y1<S: ScalarOver<K>>(&self, u: &S) -> Result<S> {
        let c: S = self.lift(&self.cp.c);
        div(&(c * u - &S::one()), &(u.clone() - &S::one()), "Y_1(u) at u = 1")
    }

    /// Factors of `Y_j(u_1, ..., u_{j-1}, u)`, left to right, together with
    /// their overall scalar.
    pub fn y_script_factors<S: ScalarOver<K>>(&self, us: &[S], u: &S) -> Result<(Vec<Linear<S>>, S)> {
        let j = us.len() + 1;
        let mut factors = Vec::with_capacity(2 * (j - 1));
        for m in (1..j).rev() {
            factors.push(self.q(m, &us[m - 1], u)?);
        }
        let mut scalar = self.y1(u)?;
        for m in 1..j {
            // T_m(u, u_m)^{-1} = T_m(u_m, u) f(u_m, u).
            scalar = scalar * &self.f(&us[m - 1], u)?;
            factors.push(self.t(m, &us[m - 1], u)?);
        }
        Ok((factors, scalar))
    }

    /// `Y_j(u_1, ..., u_{j-1}, u)` as an element of `BMW_n`, `j <= n`.
    pub fn y_script<S: ScalarOver<K>>(&self, ctx: &Context<K>, us: &[S], u: &S) -> Result<Element<S>> {
        let (factors, scalar) = self.y_script_factors(us, u)?;
        let mut acc: Element<S> = ctx.scalar(scalar);
        for l in &factors {
            acc = mul_right(ctx, &acc, l);
        }
        Ok(acc)
    }
}
