use super::spectral::{mul_right, Baxter};
use crate::bmw::{Context, Element};
use crate::error::{Error, Result};
use crate::scalars::{q_factorial, q_number, RatFunc, Rational, Scalar, DEFAULT_VAR};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Symmetrizer,
    Antisymmetrizer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Chain,
    YProduct,
}

/// Content sequence `1, q^{+-2}, ..., q^{+-2(n-1)}` of the one-row or
/// one-column tableau.
pub fn row_contents(ctx: &Context<Rational>, kind: Kind, n: usize) -> Vec<Rational> {
    let s: i64 = match kind {
        Kind::Symmetrizer => 1,
        Kind::Antisymmetrizer => -1,
    };
    (0..n as i64).map(|k| ctx.params().q2(s * k)).collect()
}

fn check(ctx: &Context<Rational>, n: usize) -> Result<()> {
    if n < 1 || n > ctx.n() {
        return Err(Error::Invalid(format!("n = {n} outside 1..={}", ctx.n())));
    }
    Ok(())
}

/// Factorized chain form, built recursively from `A_1 = S_1 = 1`:
/// `A_m = (-1)^{m-1}/m_q T_1(q^2) ... T_{m-1}(q^{2(m-1)}) A_{m-1}` and
/// `S_m = 1/m_q T*_1(q^{-2}) ... T*_{m-1}(q^{-2(m-1)}) S_{m-1}`.
pub fn chain(ctx: &Context<Rational>, kind: Kind, n: usize) -> Result<Element<Rational>> {
    check(ctx, n)?;
    let q = ctx.params().q.clone();
    let (bax, sign) = match kind {
        Kind::Antisymmetrizer => (Baxter::of(ctx), 1i64),
        Kind::Symmetrizer => (Baxter::starred(ctx)?, -1),
    };
    let mut prev: Element<Rational> = ctx.one();
    for m in 2..=n {
        let mut acc: Element<Rational> = ctx.one();
        for i in 1..m {
            let x = q.pow_i(2 * sign * i as i64)?;
            acc = mul_right(ctx, &acc, &bax.t1(i, &x)?);
        }
        acc = ctx.mul(&acc, &prev);
        let mut coeff = q_number(m as u32, &q)?.recip();
        if kind == Kind::Antisymmetrizer && m % 2 == 0 {
            coeff = -coeff;
        }
        prev = acc.scale(&coeff);
    }
    Ok(prev)
}

/// `Y_n(u) = Q_2 ... Q_n T_n ... T_2` with
/// `Q_j = T_{j-1}(1/(c u_1 u_j)) ... T_1(1/(c u_{j-1} u_j))` and
/// `T_j = T_1(u_{j-1}, u_j) ... T_{j-1}(u_1, u_j)`.
pub fn y_product(ctx: &Context<Rational>, bax: &Baxter, us: &[Rational]) -> Result<Element<Rational>> {
    let n = us.len();
    let c = &bax.cp.c;
    let mut acc: Element<Rational> = ctx.one();
    for j in 2..=n {
        for m in (1..j).rev() {
            // T_m(1/(c u_{j-m} u_j)).
            let x = (c * &us[j - m - 1] * &us[j - 1]).recip();
            acc = mul_right(ctx, &acc, &bax.t1(m, &x)?);
        }
    }
    for j in (2..=n).rev() {
        for m in 1..j {
            acc = mul_right(ctx, &acc, &bax.t(m, &us[j - m - 1], &us[j - 1])?);
        }
    }
    Ok(acc)
}

/// The scalar prefactor of the `Y_n` form by consecutive evaluation of
/// `prod_k (u_k - c_k)/(c u_k c_k - 1) (c u_k - 1)/(u_k - 1)
///  prod_{r<k} (u_k - u_r)^2/((u_k - q^2 u_r)(u_k - q^{-2} u_r))`.
pub fn prefactor_by_evaluation(bax: &Baxter, contents: &[Rational]) -> Result<Rational> {
    let u = RatFunc::var(DEFAULT_VAR);
    let mut total = Rational::from_integer(1.into());
    for (k, ck) in contents.iter().enumerate() {
        let ckf = RatFunc::constant(ck.clone());
        let cf = RatFunc::constant(bax.cp.c.clone());
        let mut g = (u.clone() - &ckf).try_div(&(cf * &u * &ckf - &RatFunc::from_int(1)))?;
        g = g * &bax.y1(&u)?;
        for r in &contents[..k] {
            g = g * &bax.f(&u, &RatFunc::constant(r.clone()))?;
        }
        total *= g.evaluate_at(ck)?;
    }
    Ok(total)
}

/// Closed-form prefactors
/// `q^{+-n(n-1)/2}/n_q! prod_{k<n} (q^{+-2k-1}/nu + 1)/(q^{+-4k-1}/nu + 1)`.
pub fn prefactor_closed_form(ctx: &Context<Rational>, kind: Kind, n: usize) -> Result<Rational> {
    let p = ctx.params();
    let s: i64 = match kind {
        Kind::Symmetrizer => 1,
        Kind::Antisymmetrizer => -1,
    };
    let n_i = n as i64;
    let nu_inv = p.nu.recip();
    let one = Rational::from_integer(1.into());
    let mut out = p.q.pow_i(s * n_i * (n_i - 1) / 2)? / q_factorial(n as u32, &p.q)?;
    for k in 1..n_i {
        let num = p.q.pow_i(s * 2 * k - 1)? * &nu_inv + &one;
        let den = p.q.pow_i(s * 4 * k - 1)? * &nu_inv + &one;
        out = out * num / den;
    }
    Ok(out)
}

/// The `Y_n` form with the prefactor obtained by consecutive evaluation.
pub fn y_form(ctx: &Context<Rational>, kind: Kind, n: usize) -> Result<Element<Rational>> {
    check(ctx, n)?;
    let bax = Baxter::of(ctx);
    let us = row_contents(ctx, kind, n);
    let pre = prefactor_by_evaluation(&bax, &us)?;
    Ok(y_product(ctx, &bax, &us)?.scale(&pre))
}

pub fn build(ctx: &Context<Rational>, kind: Kind, form: Form, n: usize) -> Result<Element<Rational>> {
    match form {
        Form::Chain => chain(ctx, kind, n),
        Form::YProduct => y_form(ctx, kind, n),
    }
}

/// `A_m` or `S_m` of a subalgebra `BMW_m`, embedded in `BMW_n`.
pub fn symmetrizer(ctx: &Context<Rational>, n: usize, form: Form) -> Result<Element<Rational>> {
    build(ctx, Kind::Symmetrizer, form, n)
}

pub fn antisymmetrizer(ctx: &Context<Rational>, n: usize, form: Form) -> Result<Element<Rational>> {
    build(ctx, Kind::Antisymmetrizer, form, n)
}

/// Eigen-relations `X T_i = T_i X = lambda X` and `K_i X = X K_i = 0`,
/// `lambda = q` for the symmetrizer and `-1/q` for the antisymmetrizer.
pub fn eigen_relations_hold(ctx: &Context<Rational>, kind: Kind, x: &Element<Rational>, n: usize) -> Result<bool> {
    let q = &ctx.params().q;
    let lambda = match kind {
        Kind::Symmetrizer => q.clone(),
        Kind::Antisymmetrizer => -q.recip(),
    };
    let target = x.scale(&lambda);
    for i in 1..n {
        let t = ctx.gen_t(i)?;
        let k = ctx.gen_k(i)?;
        if ctx.mul(x, &t) != target || ctx.mul(&t, x) != target {
            return Ok(false);
        }
        if !ctx.mul(x, &k).is_zero() || !ctx.mul(&k, x).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
