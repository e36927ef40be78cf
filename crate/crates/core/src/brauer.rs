//! The Brauer algebra `B_n(omega)` on perfect matchings of `2n` points.
//!
//! Points `0..n` are the top row `1..n`, points `n..2n` the bottom row
//! `1'..n'`.  In a product `a b` the diagram `a` sits on top of `b`.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::bmw::{Element, Letter};
use crate::error::{Error, Result};
use crate::scalars::{rational_to_string, One, Rational, Scalar};

/// `partner[p]` is the point matched with `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    partner: Vec<u8>,
}

impl Diagram {
    pub fn from_partner(partner: Vec<u8>) -> Result<Self> {
        let m = partner.len();
        if m % 2 != 0 {
            return Err(Error::Invalid("odd number of points".into()));
        }
        for (p, &x) in partner.iter().enumerate() {
            if x as usize >= m || x as usize == p || partner[x as usize] as usize != p {
                return Err(Error::Invalid(format!("not a perfect matching: {partner:?}")));
            }
        }
        Ok(Diagram { partner })
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> &[u8] {
        &self.partner
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect();
        Diagram { partner }
    }

    pub fn s(n: usize, i: usize) -> Self {
        let mut d = Diagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = (n + b) as u8;
        d.partner[n + b] = a as u8;
        d.partner[b] = (n + a) as u8;
        d.partner[n + a] = b as u8;
        d
    }

    pub fn eps(n: usize, i: usize) -> Self {
        let mut d = Diagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        d
    }

    /// `a` over `b`: the resulting diagram and the number of closed loops.
    pub fn compose(&self, other: &Diagram) -> (Diagram, usize) {
        let n = self.n();
        let (a, b) = (&self.partner, &other.partner);
        let mut out = vec![u8::MAX; 2 * n];
        let mut seen = vec![false; n];
        for start in 0..2 * n {
            if out[start] != u8::MAX {
                continue;
            }
            // Outer points: top row of a, bottom row of b.
            let (mut in_a, mut p) = (start < n, start);
            let end = loop {
                if in_a {
                    let x = a[p] as usize;
                    if x < n {
                        break x;
                    }
                    seen[x - n] = true;
                    in_a = false;
                    p = x - n;
                } else {
                    let x = b[p] as usize;
                    if x >= n {
                        break x;
                    }
                    seen[x] = true;
                    in_a = true;
                    p = n + x;
                }
            };
            out[start] = end as u8;
            out[end] = start as u8;
        }
        let mut loops = 0;
        for m in 0..n {
            if seen[m] {
                continue;
            }
            loops += 1;
            let mut x = m;
            loop {
                seen[x] = true;
                // Down through a's bottom row is not possible; alternate
                // b's top edge and a's bottom edge inside the middle row.
                let y = b[x] as usize;
                seen[y] = true;
                x = a[n + y] as usize - n;
                if x == m {
                    break;
                }
            }
        }
        (Diagram { partner: out }, loops)
    }

    /// Pairs `["1","2'"]`, each pair and the list sorted.
    pub fn to_json(&self) -> Value {
        let n = self.n();
        let label = |p: usize| if p < n { (p + 1).to_string() } else { format!("{}'", p - n + 1) };
        let mut pairs: Vec<(usize, usize)> = (0..2 * n)
            .filter(|&p| p < self.partner[p] as usize)
            .map(|p| (p, self.partner[p] as usize))
            .collect();
        pairs.sort();
        Value::Array(pairs.into_iter().map(|(x, y)| json!([label(x), label(y)])).collect())
    }
}

fn matchings(points: &mut Vec<usize>, partner: &mut Vec<u8>, out: &mut Vec<Diagram>) {
    if points.is_empty() {
        out.push(Diagram {
            partner: partner.clone(),
        });
        return;
    }
    let first = points.remove(0);
    for k in 0..points.len() {
        let other = points.remove(k);
        partner[first] = other as u8;
        partner[other] = first as u8;
        matchings(points, partner, out);
        points.insert(k, other);
    }
    points.insert(0, first);
}

/// Coefficients on the diagram basis, indexed as in [`Brauer::diagrams`].
pub type BrauerElement = Element<Rational>;

pub struct Brauer {
    n: usize,
    omega: Rational,
    diagrams: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
}

impl Brauer {
    pub fn new(n: usize, omega: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be at least 1".into()));
        }
        let mut diagrams = Vec::new();
        matchings(&mut (0..2 * n).collect(), &mut vec![0; 2 * n], &mut diagrams);
        // The identity first, then lexicographic.
        let id = Diagram::identity(n);
        diagrams.sort_by_key(|d| (*d != id, d.clone()));
        let index = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        Ok(Brauer {
            n,
            omega,
            diagrams,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.diagrams.len()
    }

    pub fn diagrams(&self) -> &[Diagram] {
        &self.diagrams
    }

    pub fn index_of(&self, d: &Diagram) -> usize {
        self.index[d]
    }

    pub fn one(&self) -> BrauerElement {
        Element::one(self.n)
    }

    pub fn zero(&self) -> BrauerElement {
        Element::zero(self.n)
    }

    pub fn diagram(&self, d: &Diagram) -> BrauerElement {
        Element::monomial(self.n, self.index[d], Rational::one())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n - 1,
            });
        }
        Ok(())
    }

    pub fn s(&self, i: usize) -> Result<BrauerElement> {
        self.check_index(i)?;
        Ok(self.diagram(&Diagram::s(self.n, i)))
    }

    pub fn eps(&self, i: usize) -> Result<BrauerElement> {
        self.check_index(i)?;
        Ok(self.diagram(&Diagram::eps(self.n, i)))
    }

    pub fn mul(&self, a: &BrauerElement, b: &BrauerElement) -> BrauerElement {
        let mut out = self.zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                let (d, loops) = self.diagrams[x].compose(&self.diagrams[y]);
                let k = self.omega.pow_i(loops as i64).expect("nonnegative power");
                out.add_term(self.index[&d], cx.clone() * cy * &k);
            }
        }
        out
    }

    /// Image of a word under `T_i -> sign s_i`, `K_i -> eps_i`.
    pub fn word_image(&self, letters: &[Letter], sign: &Rational) -> Result<BrauerElement> {
        let mut x = self.one();
        for l in letters {
            let g = match *l {
                Letter::T(i) | Letter::Tinv(i) => self.s(i)?.scale(sign),
                Letter::K(i) => self.eps(i)?,
            };
            x = self.mul(&x, &g);
        }
        Ok(x)
    }

    /// `{"algebra":"brauer","n":..,"omega":..,"terms":[{"diagram":[["1","2'"],..],"coeff":".."}]}`.
    pub fn to_json(&self, e: &BrauerElement) -> Value {
        let terms: Vec<Value> = e
            .terms()
            .map(|(d, c)| json!({"diagram": self.diagrams[d].to_json(), "coeff": rational_to_string(c)}))
            .collect();
        json!({
            "algebra": "brauer",
            "n": self.n,
            "omega": rational_to_string(&self.omega),
            "terms": terms,
        })
    }

    /// Idempotency, orthogonality and completeness of a family of elements.
    pub fn system_holds(&self, system: &[BrauerElement]) -> (bool, bool, bool) {
        let idem = system.iter().all(|e| !e.is_zero() && self.mul(e, e) == *e);
        let orth = system.iter().enumerate().all(|(a, ea)| {
            system
                .iter()
                .enumerate()
                .all(|(b, eb)| a == b || self.mul(ea, eb).is_zero())
        });
        let sum = system.iter().fold(self.zero(), |acc, e| acc.add(e));
        (idem, orth, sum == self.one())
    }
}

impl Brauer {
    /// Whether `s_i^2 = 1`, `eps_i^2 = omega eps_i` and `s_i eps_i = eps_i s_i = eps_i`.
    pub fn generator_relations_hold(&self) -> bool {
        (1..self.n).all(|i| {
            let s = self.s(i).unwrap();
            let e = self.eps(i).unwrap();
            self.mul(&s, &s) == self.one()
                && self.mul(&e, &e) == e.scale(&self.omega)
                && self.mul(&s, &e) == e
                && self.mul(&e, &s) == e
        })
    }
}
