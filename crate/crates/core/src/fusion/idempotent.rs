use serde_json::{json, Value};

use super::spectral::{mul_right, Baxter};
use crate::bmw::{element_to_json, Context, Element};
use crate::combinatorics::{extension_spectrum_in, quantum_contents_in, UpDownTableau};
use crate::error::{Error, Result};
use crate::scalars::{One, Rational, Scalar, ScalarOver, TruncLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Fusion,
    JmOracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Fusion => "fusion",
            Method::JmOracle => "jm-oracle",
        }
    }
}

/// A primitive idempotent labelled by an up-down tableau.
#[derive(Clone, Debug, PartialEq)]
pub struct Idempotent {
    pub tableau: UpDownTableau,
    pub contents: Vec<Rational>,
    pub method: Method,
    pub element: Element<Rational>,
}

impl Idempotent {
    pub fn to_json(&self, ctx: &Context<Rational>) -> Value {
        json!({
            "tableau": self.tableau.encode(),
            "contents": self.contents.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "method": self.method.name(),
            "element": element_to_json(ctx, &self.element),
        })
    }
}

/// Initial truncation order of the local parameter in a fusion step.
const STEP_ORDER: usize = 2;

/// One step of consecutive evaluation: with `contents = (c_1, ..., c_k)`,
/// forms `(u - c_k)/(c u c_k - 1) E_prev Y_k(c_1, ..., c_{k-1}, u)` over
/// Laurent series in `h = u - c_k` and takes the constant term.
pub fn fusion_step(
    ctx: &Context<Rational>,
    bax: &Baxter,
    prev: &Element<Rational>,
    contents: &[Rational],
) -> Result<Element<Rational>> {
    let mut order = STEP_ORDER;
    loop {
        match fusion_step_at_order(ctx, bax, prev, contents, order) {
            Err(Error::PrecisionExhausted(_)) if order < 64 => order *= 2,
            Err(Error::NegativeValuation(v)) => {
                return Err(Error::PoleAtEvaluation(format!(
                    "pole of order {} at u = {}",
                    -v,
                    contents[contents.len() - 1]
                )))
            }
            other => return other,
        }
    }
}

fn fusion_step_at_order(
    ctx: &Context<Rational>,
    bax: &Baxter,
    prev: &Element<Rational>,
    contents: &[Rational],
    order: usize,
) -> Result<Element<Rational>> {
    let k = contents.len();
    let ck = &contents[k - 1];
    let u = TruncLaurent::truncated(0, vec![ck.clone(), Rational::one()], order);
    let h = TruncLaurent::h();
    let prior: Vec<TruncLaurent> = contents[..k - 1].iter().map(TruncLaurent::lift).collect();
    let (factors, scalar) = bax.y_script_factors(&prior, &u)?;
    let den = TruncLaurent::lift(&(&bax.cp.c * ck)) * &u - &TruncLaurent::one();
    let pre = h.try_div(&den)?;
    let mut acc: Element<TruncLaurent> = prev.lift();
    for l in &factors {
        acc = mul_right(ctx, &acc, l);
    }
    let total = pre * &scalar;
    acc.try_map(|c| (c.clone() * &total).constant_term())
}

/// Contents of `u` for the baxterized set in use (starred sets use `-1/q`).
pub fn contents_for(bax: &Baxter, u: &UpDownTableau) -> Result<Vec<Rational>> {
    quantum_contents_in(u, &bax.cp.q, &bax.cp.nu)
}

/// Primitive idempotent of `u` by consecutive evaluation of the fusion
/// function.
pub fn fusion_idempotent(ctx: &Context<Rational>, bax: &Baxter, u: &UpDownTableau) -> Result<Idempotent> {
    check_len(ctx, u)?;
    let contents = contents_for(bax, u)?;
    let mut e: Element<Rational> = ctx.one();
    for k in 1..=u.len() {
        e = fusion_step(ctx, bax, &e, &contents[..k])?;
    }
    Ok(Idempotent {
        tableau: u.clone(),
        contents,
        method: Method::Fusion,
        element: e,
    })
}

fn check_len<K: Scalar>(ctx: &Context<K>, u: &UpDownTableau) -> Result<()> {
    if u.len() != ctx.n() {
        return Err(Error::Invalid(format!(
            "tableau of length {} in an algebra with n = {}",
            u.len(),
            ctx.n()
        )));
    }
    Ok(())
}

/// `E_k = E_{k-1} prod_{Y != c_k} (y_k - Y)/(c_k - Y)` over the spectrum of
/// `y_k` on the image of `E_{k-1}`, over any structure field.
pub fn jm_projector<K: Scalar>(ctx: &Context<K>, u: &UpDownTableau, q: &K, nu: &K) -> Result<Element<K>> {
    check_len(ctx, u)?;
    let contents = quantum_contents_in(u, q, nu)?;
    let mut e: Element<K> = ctx.one();
    for k in 2..=u.len() {
        let spectrum = extension_spectrum_in(&u.shapes()[k - 2], q, nu)?;
        let ck = &contents[k - 1];
        for y in spectrum.iter().filter(|y| *y != ck) {
            let scale = (ck.clone() - y).try_inv()?;
            let ye = ctx.mul_jm(&e, k);
            e = ye.sub(&e.scale(y)).scale(&scale);
        }
    }
    Ok(e)
}

pub fn jm_oracle_idempotent(ctx: &Context<Rational>, u: &UpDownTableau) -> Result<Idempotent> {
    let p = ctx.params();
    let element = jm_projector(ctx, u, &p.q, &p.nu)?;
    Ok(Idempotent {
        tableau: u.clone(),
        contents: quantum_contents_in(u, &p.q, &p.nu)?,
        method: Method::JmOracle,
        element,
    })
}
