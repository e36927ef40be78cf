use std::collections::BTreeMap;

use crate::bmw::{Context, Element};
use crate::scalars::{Poly, Rational, Scalar, Zero};

/// Incremental row echelon form over the rationals, tracking how each
/// reduced row is expressed in the original inputs.
struct Echelon {
    rows: Vec<(usize, BTreeMap<usize, Rational>, Vec<Rational>)>,
}

impl Echelon {
    /// Reduces `v` (input number `k`) against the stored rows; returns the
    /// dependency coefficients if it reduces to zero.
    fn push(&mut self, v: &BTreeMap<usize, Rational>, k: usize) -> Option<Vec<Rational>> {
        let mut v = v.clone();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::from_int(1);
        for (pivot, row, rc) in &self.rows {
            if let Some(f) = v.get(pivot).cloned() {
                for (i, x) in row {
                    let e = v.entry(*i).or_insert_with(Rational::zero);
                    *e -= &f * x;
                    if e.is_zero() {
                        v.remove(i);
                    }
                }
                for (i, x) in rc.iter().enumerate() {
                    combo[i] -= &f * x;
                }
            }
        }
        match v.iter().next().map(|(i, x)| (*i, x.clone())) {
            None => Some(combo),
            Some((pivot, lead)) => {
                let inv = lead.recip();
                let row = v.into_iter().map(|(i, x)| (i, x * &inv)).collect();
                let rc = combo.into_iter().map(|x| x * &inv).collect();
                self.rows.push((pivot, row, rc));
                None
            }
        }
    }
}

/// Minimal polynomial of `y` under left multiplication (as an element of
/// the algebra, not of a representation), monic.
pub fn minimal_polynomial(ctx: &Context<Rational>, y: &Element<Rational>) -> Poly {
    let mut ech = Echelon { rows: Vec::new() };
    let mut power: Element<Rational> = ctx.one();
    for k in 0..=ctx.dim() {
        let v: BTreeMap<usize, Rational> = power.terms().map(|(i, x)| (i, x.clone())).collect();
        if let Some(dep) = ech.push(&v, k) {
            return Poly::from_coeffs(dep).monic();
        }
        power = ctx.mul(&power, y);
    }
    unreachable!("powers of an element span at most dim + 1 vectors")
}

/// Dimension of the span of `xs`.
pub fn rank(xs: &[Element<Rational>]) -> usize {
    let mut ech = Echelon { rows: Vec::new() };
    for (k, x) in xs.iter().enumerate() {
        let v: BTreeMap<usize, Rational> = x.terms().map(|(i, c)| (i, c.clone())).collect();
        ech.push(&v, k);
    }
    ech.rows.len()
}
