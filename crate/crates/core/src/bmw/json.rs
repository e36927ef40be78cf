use serde_json::{json, Value};

use super::{Context, Element, Letter};
use crate::error::{Error, Result};
use crate::scalars::{parse_rational, Rational};

/// `{"algebra":"bmw","n":..,"params":{"q":..,"nu":..},"terms":[{"word":[..],"coeff":..}]}`.
pub fn element_to_json(ctx: &Context<Rational>, a: &Element<Rational>) -> Value {
    let p = ctx.params();
    let terms: Vec<Value> = a
        .terms()
        .map(|(w, c)| {
            let word: Vec<String> = ctx.word_letters(w).iter().map(|l| l.to_string()).collect();
            json!({"word": word, "coeff": c.to_string()})
        })
        .collect();
    json!({
        "algebra": "bmw",
        "n": ctx.n(),
        "params": {"q": p.q.to_string(), "nu": p.nu.to_string()},
        "terms": terms,
    })
}

/// Parses the element format; words may contain inverse letters `Ui`.
pub fn element_from_json(ctx: &Context<Rational>, v: &Value) -> Result<Element<Rational>> {
    let bad = |what: &str| Error::Parse(format!("element JSON: {what}"));
    if v["algebra"].as_str() != Some("bmw") {
        return Err(bad("algebra must be \"bmw\""));
    }
    if v["n"].as_u64() != Some(ctx.n() as u64) {
        return Err(bad("n does not match the context"));
    }
    let p = ctx.params();
    let q = parse_rational(v["params"]["q"].as_str().ok_or_else(|| bad("params.q"))?)?;
    let nu = parse_rational(v["params"]["nu"].as_str().ok_or_else(|| bad("params.nu"))?)?;
    if q != p.q || nu != p.nu {
        return Err(bad("parameters do not match the context"));
    }
    let mut out = ctx.zero();
    for term in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
        let letters = term["word"]
            .as_array()
            .ok_or_else(|| bad("word"))?
            .iter()
            .map(|l| Letter::parse(l.as_str().ok_or_else(|| bad("letter"))?))
            .collect::<Result<Vec<_>>>()?;
        let c = parse_rational(term["coeff"].as_str().ok_or_else(|| bad("coeff"))?)?;
        out = out.add(&ctx.word_element(&letters)?.scale(&c));
    }
    Ok(out)
}
