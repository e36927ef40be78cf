use std::collections::BTreeMap;

use crate::scalars::{Scalar, ScalarOver};

/// Sparse linear combination of canonical words, keyed by word index in the
/// owning context.  No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<S> {
    pub(crate) n: usize,
    pub(crate) terms: BTreeMap<usize, S>,
}

impl<S: Scalar> Element<S> {
    pub fn zero(n: usize) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, S::one())
    }

    pub fn monomial(n: usize, word: usize, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_exact_zero() {
            terms.insert(word, c);
        }
        Element { n, terms }
    }

    pub(crate) fn from_terms(n: usize, terms: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut e = Element::zero(n);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(word index, coefficient)` pairs in degree-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coeff(&self, word: usize) -> S {
        self.terms.get(&word).cloned().unwrap_or_else(S::zero)
    }

    pub(crate) fn add_term(&mut self, w: usize, c: S) {
        if c.is_exact_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = std::mem::replace(e.get_mut(), S::zero()) + &c;
                if s.is_exact_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "elements of different algebras");
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(&w, c)| (w, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_exact_zero() {
            return Element::zero(self.n);
        }
        Element::from_terms(self.n, self.terms.iter().map(|(&w, c)| (w, c.clone() * k)))
    }

    /// Adds a scalar multiple of the unit.
    pub fn add_scalar(&self, k: &S) -> Self {
        let mut out = self.clone();
        out.add_term(0, k.clone());
        out
    }

    /// Applies a coefficient map, dropping terms that become zero.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Element<T> {
        Element::from_terms(self.n, self.terms.iter().map(|(&w, c)| (w, f(c))))
    }

    pub fn try_map<T: Scalar, E>(
        &self,
        f: impl Fn(&S) -> Result<T, E>,
    ) -> Result<Element<T>, E> {
        let mut out = Element::zero(self.n);
        for (&w, c) in &self.terms {
            out.add_term(w, f(c)?);
        }
        Ok(out)
    }

    /// Embeds into a larger coefficient field.
    pub fn lift<T: ScalarOver<S>>(&self) -> Element<T> {
        self.map(|c| T::lift(c))
    }
}
