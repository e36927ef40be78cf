use super::spectral::{mul_left, mul_right, Baxter};
use crate::bmw::{Context, Element};
use crate::error::{Error, Result};
use crate::linalg::minimal_polynomial;
use crate::scalars::{Poly, Rational, Zero};

/// `(u - y)^{-1}` for a rational `u` outside the spectrum of `y`, as a
/// polynomial in `y`: with `m` the minimal polynomial of `y` and
/// `g(x) = (m(x) - m(u))/(x - u)`, `(u - y)^{-1} = g(y)/m(u)`.
pub fn resolvent(ctx: &Context<Rational>, y: &Element<Rational>, min_poly: &Poly, u: &Rational) -> Result<Element<Rational>> {
    let mu = min_poly.eval(u);
    if mu.is_zero() {
        return Err(Error::NonInvertible);
    }
    let shifted = min_poly.sub(&Poly::constant(mu.clone()));
    let lin = Poly::from_coeffs(vec![-u.clone(), Rational::from_integer(1.into())]);
    let (g, r) = shifted.div_rem(&lin);
    debug_assert!(r.is_zero());
    // Horner evaluation of g at y.
    let mut acc: Element<Rational> = ctx.zero();
    for c in g.coeffs().iter().rev() {
        acc = ctx.mul(&acc, y).add_scalar(c);
    }
    Ok(acc.scale(&mu.recip()))
}

/// `L_j(u) = (c u y_j - 1)(u - y_j)^{-1}`.
pub struct LOperator<'a> {
    ctx: &'a Context<Rational>,
    y: Element<Rational>,
    min_poly: Poly,
    c: Rational,
}

impl<'a> LOperator<'a> {
    pub fn new(ctx: &'a Context<Rational>, bax: &Baxter, j: usize) -> Result<Self> {
        let y = ctx.jm(j)?;
        let min_poly = minimal_polynomial(ctx, &y);
        Ok(LOperator {
            ctx,
            y,
            min_poly,
            c: bax.cp.c.clone(),
        })
    }

    pub fn min_poly(&self) -> &Poly {
        &self.min_poly
    }

    pub fn at(&self, u: &Rational) -> Result<Element<Rational>> {
        let inv = resolvent(self.ctx, &self.y, &self.min_poly, u)?;
        let num = self.y.scale(&(&self.c * u)).add_scalar(&Rational::from_integer((-1).into()));
        Ok(self.ctx.mul(&num, &inv))
    }
}

/// `L_j(u) T_j(1/(cuv)) L_j(v) T_j(u/v) = T_j(u/v) L_j(v) T_j(1/(cuv)) L_j(u)`.
pub fn check_reflection_l(ctx: &Context<Rational>, bax: &Baxter, j: usize, u: &Rational, v: &Rational) -> Result<bool> {
    if j + 1 > ctx.n() {
        return Err(Error::Invalid(format!("T_{j} needs n > {j}")));
    }
    let l = LOperator::new(ctx, bax, j)?;
    let (lu, lv) = (l.at(u)?, l.at(v)?);
    let x = (&bax.cp.c * u * v).recip();
    let tq = bax.t1(j, &x)?;
    let tr = bax.t1(j, &(u / v))?;
    let lhs = mul_right(ctx, &ctx.mul(&mul_right(ctx, &lu, &tq), &lv), &tr);
    let rhs = ctx.mul(&mul_right(ctx, &mul_left(ctx, &tr, &lv), &tq), &lu);
    Ok(lhs == rhs)
}

/// `Y_j(w, v) T_j(1/(cuv)) Y_j(w, u) T_j(u/v)^{-1}
///  = T_j(u/v)^{-1} Y_j(w, u) T_j(1/(cuv)) Y_j(w, v)`, `w = (u_1, ..., u_{j-1})`.
pub fn check_reflection_y(
    ctx: &Context<Rational>,
    bax: &Baxter,
    w: &[Rational],
    u: &Rational,
    v: &Rational,
) -> Result<bool> {
    let j = w.len() + 1;
    if j + 1 > ctx.n() {
        return Err(Error::Invalid(format!("T_{j} needs n > {j}")));
    }
    let yu = bax.y_script(ctx, w, u)?;
    let yv = bax.y_script(ctx, w, v)?;
    let x = (&bax.cp.c * u * v).recip();
    let tq = bax.t1(j, &x)?;
    // T_j(u/v)^{-1} = T_j(u/v, 1)^{-1} = T_j(1, u/v) f(1, u/v).
    let one = Rational::from_integer(1.into());
    let tinv = bax.t_inverse(j, &(u / v), &one)?;
    let lhs = mul_right(ctx, &ctx.mul(&mul_right(ctx, &yv, &tq), &yu), &tinv);
    let rhs = ctx.mul(&mul_right(ctx, &mul_left(ctx, &tinv, &yu), &tq), &yv);
    Ok(lhs == rhs)
}
