use std::collections::HashMap;

use super::element::Element;
use super::groebner::{self, NcPoly, Rule, RuleSet};
use super::word::{Alphabet, Letter, Word};
use crate::combinatorics::{double_factorial_odd, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::scalars::{Couplings, ParamSet, Rational, Scalar, ScalarOver};

/// Bound on processed critical pairs during completion.
pub const COMPLETION_CAP: usize = 1_000_000;

/// `BMW_n` over the structure field `K`, with its normal-form tables.
///
/// Canonical words are the normal words of a reduced Gröbner basis of the
/// defining relations under degree-lex order; word index 0 is the unit.
#[derive(Debug)]
pub struct Context<K> {
    n: usize,
    alphabet: Alphabet,
    cp: Couplings<K>,
    params: Option<ParamSet>,
    rules: Vec<Rule<K>>,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    parent: Vec<usize>,
    last: Vec<u8>,
    children: Vec<Vec<usize>>,
    /// `right[w * L + g]` is the normal form of `word(w) * letter(g)`.
    right: Vec<Vec<(usize, K)>>,
    right_is_word: Vec<bool>,
    /// Normal form of the reversed word.
    rev: Vec<Vec<(usize, K)>>,
}

/// The defining relations over the letters `T_i`, `K_i`, with inverses
/// expanded as `T_i^{-1} = T_i - d + d K_i`, `d = q - 1/q`.
pub fn defining_relations<K: Scalar>(alpha: &Alphabet, cp: &Couplings<K>) -> Result<Vec<NcPoly<K>>> {
    let n = alpha.n();
    let d = cp.qdiff.clone();
    let nu = cp.nu.clone();
    let nu_inv = nu.try_inv()?;
    let one = K::one();
    let t = |i| alpha.t(i);
    let k = |i| alpha.k(i);
    let mut out: Vec<NcPoly<K>> = Vec::new();
    for i in 1..n {
        // T_i U_i = 1 and U_i T_i = 1.
        out.push(vec![
            (vec![t(i), t(i)], one.clone()),
            (vec![t(i)], -d.clone()),
            (vec![t(i), k(i)], d.clone()),
            (vec![], -one.clone()),
        ]);
        out.push(vec![
            (vec![t(i), t(i)], one.clone()),
            (vec![t(i)], -d.clone()),
            (vec![k(i), t(i)], d.clone()),
            (vec![], -one.clone()),
        ]);
        out.push(vec![(vec![k(i), t(i)], one.clone()), (vec![k(i)], -nu.clone())]);
        out.push(vec![(vec![t(i), k(i)], one.clone()), (vec![k(i)], -nu.clone())]);
        for j in [i.wrapping_sub(1), i + 1] {
            if j < 1 || j >= n {
                continue;
            }
            // K_i T_j K_i = nu^{-1} K_i and K_i U_j K_i = nu K_i.
            out.push(vec![
                (vec![k(i), t(j), k(i)], one.clone()),
                (vec![k(i)], -nu_inv.clone()),
            ]);
            out.push(vec![
                (vec![k(i), t(j), k(i)], one.clone()),
                (vec![k(i), k(i)], -d.clone()),
                (vec![k(i), k(j), k(i)], d.clone()),
                (vec![k(i)], -nu.clone()),
            ]);
        }
        if i + 1 < n {
            out.push(vec![
                (vec![t(i), t(i + 1), t(i)], one.clone()),
                (vec![t(i + 1), t(i), t(i + 1)], -one.clone()),
            ]);
        }
        for j in i + 2..n {
            for a in [t(i), k(i)] {
                for b in [t(j), k(j)] {
                    out.push(vec![(vec![a, b], one.clone()), (vec![b, a], -one.clone())]);
                }
            }
        }
    }
    Ok(out)
}

impl Context<Rational> {
    /// Builds `BMW_n` at certified rational parameters.
    pub fn build(n: usize, params: &ParamSet) -> Result<Self> {
        Self::check_params(n, params)?;
        let mut ctx = Self::build_over(n, params.couplings())?;
        ctx.params = Some(params.clone());
        ctx.self_check()?;
        Ok(ctx)
    }

    /// Builds from a previously completed rule set (see the cache module).
    pub fn from_rules(n: usize, params: &ParamSet, rules: Vec<Rule<Rational>>) -> Result<Self> {
        Self::check_params(n, params)?;
        let mut ctx = Self::assemble(n, params.couplings(), RuleSet::from_rules(rules))?;
        ctx.params = Some(params.clone());
        ctx.self_check()?;
        Ok(ctx)
    }

    fn check_params(n: usize, params: &ParamSet) -> Result<()> {
        if n > DEFAULT_CAP {
            return Err(Error::CapExceeded { n, cap: DEFAULT_CAP });
        }
        if params.certified_n < n {
            return Err(Error::NotGeneric(format!(
                "parameters certified only for n <= {}",
                params.certified_n
            )));
        }
        Ok(())
    }

    fn self_check(&self) -> Result<()> {
        let report = super::verify_relations(self)?;
        match report.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::Invalid(format!(
                "relation check failed: {} ({})",
                c.relation, c.instance
            ))),
        }
    }

    pub fn params(&self) -> &ParamSet {
        self.params.as_ref().expect("rational contexts carry parameters")
    }
}

impl<K: Scalar> Context<K> {
    /// Builds `BMW_n` over an arbitrary structure field.
    pub fn build_over(n: usize, cp: Couplings<K>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be at least 1".into()));
        }
        if n > DEFAULT_CAP {
            return Err(Error::CapExceeded { n, cap: DEFAULT_CAP });
        }
        let alpha = Alphabet::new(n);
        let inputs = defining_relations(&alpha, &cp)?;
        let gb = groebner::complete(inputs, COMPLETION_CAP)?;
        Self::assemble(n, cp, gb)
    }

    fn assemble(n: usize, cp: Couplings<K>, gb: RuleSet<K>) -> Result<Self> {
        let alphabet = Alphabet::new(n);
        let expected = double_factorial_odd(n);
        let words = groebner::normal_words(&gb, alphabet.len(), expected)?;
        if words.len() != expected {
            return Err(Error::DimensionMismatch {
                found: words.len(),
                expected,
            });
        }
        let index: HashMap<Word, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut parent = vec![0; words.len()];
        let mut last = vec![0u8; words.len()];
        let mut children = vec![Vec::new(); words.len()];
        for (i, w) in words.iter().enumerate().skip(1) {
            let p = index[&w[..w.len() - 1]];
            parent[i] = p;
            last[i] = *w.last().unwrap();
            children[p].push(i);
        }
        let to_indexed = |poly: NcPoly<K>| -> Vec<(usize, K)> {
            let mut v: Vec<(usize, K)> = poly.into_iter().map(|(w, c)| (index[&w], c)).collect();
            v.sort_by_key(|(i, _)| *i);
            v
        };
        let l = alphabet.len();
        let mut right = Vec::with_capacity(words.len() * l);
        let mut right_is_word = Vec::with_capacity(words.len() * l);
        for w in &words {
            for g in 0..l as u8 {
                let mut nw = w.clone();
                nw.push(g);
                if let Some(&i) = index.get(&nw) {
                    right.push(vec![(i, K::one())]);
                    right_is_word.push(true);
                } else {
                    right.push(to_indexed(gb.reduce(vec![(nw, K::one())])));
                    right_is_word.push(false);
                }
            }
        }
        let rev = words
            .iter()
            .map(|w| {
                let r: Word = w.iter().rev().copied().collect();
                match index.get(&r) {
                    Some(&i) => vec![(i, K::one())],
                    None => to_indexed(gb.reduce(vec![(r, K::one())])),
                }
            })
            .collect();
        Ok(Context {
            n,
            alphabet,
            cp,
            params: None,
            rules: gb.rules().cloned().collect(),
            words,
            index,
            parent,
            last,
            children,
            right,
            right_is_word,
            rev,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn couplings(&self) -> &Couplings<K> {
        &self.cp
    }

    pub fn rules(&self) -> &[Rule<K>] {
        &self.rules
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    pub fn word_letters(&self, i: usize) -> Vec<Letter> {
        self.alphabet.letters(&self.words[i])
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn format_word(&self, i: usize) -> String {
        self.alphabet.format(&self.words[i])
    }

    pub fn word_index(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            Err(Error::IndexOutOfRange {
                index: i,
                max: self.n - 1,
            })
        } else {
            Ok(())
        }
    }

    pub fn one<S: ScalarOver<K>>(&self) -> Element<S> {
        Element::one(self.n)
    }

    pub fn zero<S: ScalarOver<K>>(&self) -> Element<S> {
        Element::zero(self.n)
    }

    pub fn scalar<S: ScalarOver<K>>(&self, c: S) -> Element<S> {
        Element::monomial(self.n, 0, c)
    }

    pub fn gen_t(&self, i: usize) -> Result<Element<K>> {
        self.check_index(i)?;
        Ok(Element::monomial(self.n, self.index[&vec![self.alphabet.t(i)]], K::one()))
    }

    pub fn gen_k(&self, i: usize) -> Result<Element<K>> {
        self.check_index(i)?;
        Ok(Element::monomial(self.n, self.index[&vec![self.alphabet.k(i)]], K::one()))
    }

    /// `T_i^{-1} = T_i - (q - 1/q) + (q - 1/q) K_i`.
    pub fn gen_tinv(&self, i: usize) -> Result<Element<K>> {
        self.linear(i, -self.cp.qdiff.clone(), K::one(), self.cp.qdiff.clone())
    }

    /// `a + b T_i + c K_i`.
    pub fn linear<S: ScalarOver<K>>(&self, i: usize, a: S, b: S, c: S) -> Result<Element<S>> {
        self.check_index(i)?;
        let ti = self.index[&vec![self.alphabet.t(i)]];
        let ki = self.index[&vec![self.alphabet.k(i)]];
        Ok(Element::from_terms(self.n, [(0, a), (ti, b), (ki, c)]))
    }

    pub fn letter<S: ScalarOver<K>>(&self, l: Letter) -> Result<Element<S>> {
        Ok(match l {
            Letter::T(i) => self.gen_t(i)?.lift(),
            Letter::K(i) => self.gen_k(i)?.lift(),
            Letter::Tinv(i) => self.gen_tinv(i)?.lift(),
        })
    }

    /// Product of letters, which may include inverses.
    pub fn word_element(&self, letters: &[Letter]) -> Result<Element<K>> {
        let mut acc: Element<K> = self.one();
        for &l in letters {
            acc = match l {
                Letter::T(i) => self.mul_code(&acc, self.code_checked(i, self.alphabet.t(i))?),
                Letter::K(i) => self.mul_code(&acc, self.code_checked(i, self.alphabet.k(i))?),
                Letter::Tinv(_) => self.mul(&acc, &self.letter(l)?),
            };
        }
        Ok(acc)
    }

    fn code_checked(&self, i: usize, code: u8) -> Result<u8> {
        self.check_index(i)?;
        Ok(code)
    }

    /// `a * x` for a letter code `x`.
    pub fn mul_code<S: ScalarOver<K>>(&self, a: &Element<S>, x: u8) -> Element<S> {
        let terms: Vec<(usize, S)> = a.terms.iter().map(|(&w, c)| (w, c.clone())).collect();
        let mut acc = Accum::new(self.dim());
        Element::from_terms(self.n, self.step(&terms, x, &mut acc))
    }

    fn step<S: ScalarOver<K>>(&self, v: &[(usize, S)], x: u8, acc: &mut Accum<S>) -> Vec<(usize, S)> {
        let l = self.alphabet.len();
        for (w, c) in v {
            let slot = w * l + x as usize;
            if self.right_is_word[slot] {
                acc.add(self.right[slot][0].0, c.clone());
            } else {
                for (t, d) in &self.right[slot] {
                    acc.add(*t, c.scale(d));
                }
            }
        }
        acc.drain()
    }

    /// Product in normal form.
    pub fn mul<S: ScalarOver<K>>(&self, a: &Element<S>, b: &Element<S>) -> Element<S> {
        assert_eq!(a.n, self.n, "element from a different algebra");
        assert_eq!(b.n, self.n, "element from a different algebra");
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut needed = vec![false; self.dim()];
        for &w in b.terms.keys() {
            let mut x = w;
            while !needed[x] {
                needed[x] = true;
                if x == 0 {
                    break;
                }
                x = self.parent[x];
            }
        }
        let mut acc = Accum::new(self.dim());
        let mut out = Accum::new(self.dim());
        let start: Vec<(usize, S)> = a.terms.iter().map(|(&w, c)| (w, c.clone())).collect();
        let mut stack = vec![(0usize, start)];
        while let Some((node, v)) = stack.pop() {
            if let Some(c) = b.terms.get(&node) {
                for (w, d) in &v {
                    out.add(*w, d.clone() * c);
                }
            }
            for &child in &self.children[node] {
                if needed[child] {
                    let nv = self.step(&v, self.last[child], &mut acc);
                    if !nv.is_empty() {
                        stack.push((child, nv));
                    }
                }
            }
        }
        Element::from_terms(self.n, out.drain())
    }

    /// Product of several factors, left to right.
    pub fn product<S: ScalarOver<K>>(&self, factors: &[Element<S>]) -> Element<S> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// `a * (x + y T_i + z K_i)` without forming the right factor's product tree.
    pub fn mul_linear<S: ScalarOver<K>>(&self, a: &Element<S>, i: usize, x: &S, y: &S, z: &S) -> Element<S> {
        let mut acc = Accum::new(self.dim());
        let v: Vec<(usize, S)> = a.terms.iter().map(|(&w, c)| (w, c.clone())).collect();
        let mut out = Element::zero(self.n);
        if !x.is_exact_zero() {
            out = a.scale(x);
        }
        if !y.is_exact_zero() {
            for (w, c) in self.step(&v, self.alphabet.t(i), &mut acc) {
                out.add_term(w, c * y);
            }
        }
        if !z.is_exact_zero() {
            for (w, c) in self.step(&v, self.alphabet.k(i), &mut acc) {
                out.add_term(w, c * z);
            }
        }
        out
    }

    /// The anti-automorphism fixing every `T_i` and `K_i`.
    pub fn rho<S: ScalarOver<K>>(&self, a: &Element<S>) -> Element<S> {
        let mut out = Accum::new(self.dim());
        for (&w, c) in &a.terms {
            for (t, d) in &self.rev[w] {
                out.add(*t, c.scale(d));
            }
        }
        Element::from_terms(self.n, out.drain())
    }

    /// Left multiplication by a letter code, via `rho`.
    pub fn code_mul<S: ScalarOver<K>>(&self, x: u8, a: &Element<S>) -> Element<S> {
        self.rho(&self.mul_code(&self.rho(a), x))
    }

    /// Jucys–Murphy element `y_k = T_{k-1} ... T_1 T_1 ... T_{k-1}`, `y_1 = 1`.
    pub fn jm(&self, k: usize) -> Result<Element<K>> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.n,
            });
        }
        let mut acc = self.one();
        for i in (1..k).rev() {
            acc = self.mul_code(&acc, self.alphabet.t(i));
        }
        for i in 1..k {
            acc = self.mul_code(&acc, self.alphabet.t(i));
        }
        Ok(acc)
    }

    /// `a * y_k`, applied letter by letter.
    pub fn mul_jm<S: ScalarOver<K>>(&self, a: &Element<S>, k: usize) -> Element<S> {
        let mut acc = a.clone();
        for i in (1..k).rev().chain(1..k) {
            acc = self.mul_code(&acc, self.alphabet.t(i));
        }
        acc
    }

    pub fn lift_element<S: ScalarOver<K>>(&self, a: &Element<K>) -> Element<S> {
        a.lift()
    }

    /// Whether the word contains a `K` letter.
    pub fn has_k(&self, i: usize) -> bool {
        self.words[i].iter().any(|&c| self.alphabet.is_k(c))
    }

    pub fn format<S: ScalarOver<K> + std::fmt::Display>(&self, a: &Element<S>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms
            .iter()
            .map(|(&w, c)| format!("({c})*{}", self.format_word(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Dense accumulator reused across steps.
struct Accum<S> {
    slots: Vec<Option<S>>,
    touched: Vec<usize>,
}

impl<S: Scalar> Accum<S> {
    fn new(dim: usize) -> Self {
        Accum {
            slots: (0..dim).map(|_| None).collect(),
            touched: Vec::new(),
        }
    }

    fn add(&mut self, i: usize, c: S) {
        match &mut self.slots[i] {
            Some(v) => {
                let s = std::mem::replace(v, S::zero()) + &c;
                *v = s;
            }
            slot @ None => {
                *slot = Some(c);
                self.touched.push(i);
            }
        }
    }

    fn drain(&mut self) -> Vec<(usize, S)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(c) = self.slots[i].take() {
                if !c.is_exact_zero() {
                    out.push((i, c));
                }
            }
        }
        self.touched.clear();
        out
    }
}
