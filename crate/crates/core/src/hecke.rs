//! The Hecke algebra `H_n(q)` in the permutation basis `T_w`, the quotient
//! map from `BMW_n` killing every `K_i`, and the one-parameter family of
//! fusion functions with a free `c`.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::bmw::{Context, Element, Letter};
use crate::combinatorics::{enumerate_standard, quantum_contents_in, UpDownTableau};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{rat, rational_to_string, One, Rational, Scalar, ScalarOver, TruncLaurent, Zero};

/// Permutation in one-line notation, `w[j] = w(j + 1) - 1`.
pub type Perm = Vec<u8>;

/// Coefficients on the permutation basis, indexed as in [`Hecke::perms`].
pub type HeckeElement<S> = Element<S>;

fn inversions(w: &[u8]) -> usize {
    let mut k = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                k += 1;
            }
        }
    }
    k
}

/// Lexicographically minimal reduced word of `w`, letters `1..n-1`.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut x = w.to_vec();
    let mut out = Vec::new();
    // Peel off left descents: s_i is a left descent when i + 1 precedes i
    // in the one-line notation.
    'outer: loop {
        let mut pos = vec![0usize; x.len()];
        for (p, &v) in x.iter().enumerate() {
            pos[v as usize] = p;
        }
        for i in 0..x.len().saturating_sub(1) {
            if pos[i] > pos[i + 1] {
                out.push(i + 1);
                for v in x.iter_mut() {
                    if *v as usize == i {
                        *v += 1;
                    } else if *v as usize == i + 1 {
                        *v -= 1;
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    out
}

pub struct Hecke {
    n: usize,
    q: Rational,
    qdiff: Rational,
    perms: Vec<Perm>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl Hecke {
    pub fn new(n: usize, q: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be at least 1".into()));
        }
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut perms: Vec<Perm> = Vec::new();
        let mut cur: Perm = (0..n as u8).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        perms.sort_by_key(|w| (inversions(w), w.clone()));
        let index: HashMap<Perm, usize> = perms.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let lengths = perms.iter().map(|w| inversions(w)).collect();
        let words = perms.iter().map(|w| reduced_word(w)).collect();
        let right = perms
            .iter()
            .map(|w| {
                (1..n)
                    .map(|i| {
                        let mut ws = w.clone();
                        ws.swap(i - 1, i);
                        index[&ws]
                    })
                    .collect()
            })
            .collect();
        let qdiff = &q - q.recip();
        Ok(Hecke {
            n,
            q,
            qdiff,
            perms,
            lengths,
            words,
            right,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn reduced_word_of(&self, idx: usize) -> &[usize] {
        &self.words[idx]
    }

    pub fn one<S: Scalar>(&self) -> HeckeElement<S> {
        Element::one(self.n)
    }

    pub fn zero<S: Scalar>(&self) -> HeckeElement<S> {
        Element::zero(self.n)
    }

    pub fn gen(&self, i: usize) -> Result<HeckeElement<Rational>> {
        self.check_index(i)?;
        Ok(Element::monomial(self.n, self.right[0][i - 1], Rational::one()))
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

    /// `a * T_i`.
    pub fn mul_gen<S: ScalarOver<Rational>>(&self, a: &HeckeElement<S>, i: usize) -> HeckeElement<S> {
        let mut out = Element::zero(self.n);
        for (w, c) in a.terms() {
            let ws = self.right[w][i - 1];
            out.add_term(ws, c.clone());
            if self.lengths[ws] < self.lengths[w] {
                out.add_term(w, c.scale(&self.qdiff));
            }
        }
        out
    }

    /// `a * (x + y T_i)`.
    pub fn mul_linear<S: ScalarOver<Rational>>(&self, a: &HeckeElement<S>, i: usize, x: &S, y: &S) -> HeckeElement<S> {
        let mut out = a.scale(x);
        if !y.is_exact_zero() {
            out = out.add(&self.mul_gen(a, i).scale(y));
        }
        out
    }

    pub fn mul<S: ScalarOver<Rational>>(&self, a: &HeckeElement<S>, b: &HeckeElement<S>) -> HeckeElement<S> {
        let mut out = Element::zero(self.n);
        for (w, c) in b.terms() {
            let mut x = a.clone();
            for &i in &self.words[w] {
                x = self.mul_gen(&x, i);
            }
            out = out.add(&x.scale(c));
        }
        out
    }

    /// Image of a `BMW_n` element under `T_i -> T_i`, `K_i -> 0`.
    pub fn quotient(&self, ctx: &Context<Rational>, e: &Element<Rational>) -> Result<HeckeElement<Rational>> {
        if ctx.n() != self.n {
            return Err(Error::Invalid(format!("BMW_{} element in H_{}", ctx.n(), self.n)));
        }
        if ctx.params().q != self.q {
            return Err(Error::Invalid("q differs between the algebras".into()));
        }
        let mut out = self.zero();
        for (w, c) in e.terms() {
            let mut x = self.one();
            let mut killed = false;
            for l in ctx.word_letters(w) {
                match l {
                    Letter::T(i) => x = self.mul_gen(&x, i),
                    Letter::Tinv(i) => x = self.mul_gen(&x, i).sub(&x.scale(&self.qdiff)),
                    Letter::K(_) => {
                        killed = true;
                        break;
                    }
                }
            }
            if !killed {
                out = out.add(&x.scale(c));
            }
        }
        Ok(out)
    }

    /// `{"algebra":"hecke","n":..,"q":..,"terms":[{"perm":[2,1,3],"coeff":".."}]}`.
    pub fn to_json(&self, e: &HeckeElement<Rational>) -> Value {
        let terms: Vec<Value> = e
            .terms()
            .map(|(w, c)| {
                json!({
                    "perm": self.perms[w].iter().map(|&v| v as u32 + 1).collect::<Vec<_>>(),
                    "coeff": rational_to_string(c),
                })
            })
            .collect();
        json!({
            "algebra": "hecke",
            "n": self.n,
            "q": rational_to_string(&self.q),
            "terms": terms,
        })
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// How the inverted baxterized factors of `Y_j` are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseForm {
    /// `T_k(u_j, u_k)^{-1}`, the substitution into the BMW `Y_j`.
    Substituted,
    /// `(T_k + (q - q^{-1})/(u_j/u_k - 1))^{-1} = T_k(u_k, u_j)^{-1}`, as the
    /// explicit Hecke family is printed.
    Literal,
}

/// Fusion functions of the Hecke algebra with a free parameter `c`.
pub struct HeckeFamily<'a> {
    pub alg: &'a Hecke,
    pub c: Rational,
    pub form: InverseForm,
}

type Factor<S> = (usize, S, S);

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

impl HeckeFamily<'_> {
    fn lift<S: ScalarOver<Rational>>(r: &Rational) -> S {
        S::lift(r)
    }

    /// `T_i + (q - q^{-1})/(u_2/u_1 - 1)` as `(i, a, b)` with `a + b T_i`.
    fn t<S: ScalarOver<Rational>>(&self, i: usize, u1: &S, u2: &S) -> Result<Factor<S>> {
        let d: S = Self::lift(&self.alg.qdiff);
        let r = div(u2, u1, "T(u1,u2) with u1 = 0")?;
        Ok((i, div(&d, &(r - &S::one()), "T(u1,u2) at u1 = u2")?, S::one()))
    }

    fn q<S: ScalarOver<Rational>>(&self, i: usize, u1: &S, u2: &S) -> Result<Factor<S>> {
        let d: S = Self::lift(&self.alg.qdiff);
        let c: S = Self::lift(&self.c);
        let den = c * u1 * u2 - &S::one();
        Ok((i, div(&d, &den, "Q(u1,u2) at c u1 u2 = 1")?, S::one()))
    }

    fn f<S: ScalarOver<Rational>>(&self, u: &S, v: &S) -> Result<S> {
        let q2 = &self.alg.q * &self.alg.q;
        let diff = u.clone() - v;
        let den = (u.clone() - &(Self::lift::<S>(&q2) * v)) * &(u.clone() - &(Self::lift::<S>(&q2.recip()) * v));
        div(&(diff.clone() * &diff), &den, "f(u,v) at u = q^(+-2) v")
    }

    /// Factors of `Y_j(u_1, ..., u_{j-1}, u)` and their scalar.
    pub fn factors<S: ScalarOver<Rational>>(&self, us: &[S], u: &S) -> Result<(Vec<Factor<S>>, S)> {
        let j = us.len() + 1;
        let mut out = Vec::new();
        for m in (1..j).rev() {
            out.push(self.q(m, &us[m - 1], u)?);
        }
        let c: S = Self::lift(&self.c);
        let mut scalar = div(&(c * u - &S::one()), &(u.clone() - &S::one()), "(cu-1)/(u-1) at u = 1")?;
        for m in 1..j {
            let um = &us[m - 1];
            // T(v, w)^{-1} = T(w, v) f(w, v).
            let (fac, f) = match self.form {
                InverseForm::Substituted => (self.t(m, um, u)?, self.f(um, u)?),
                InverseForm::Literal => (self.t(m, u, um)?, self.f(u, um)?),
            };
            scalar = scalar * &f;
            out.push(fac);
        }
        Ok((out, scalar))
    }

    fn step_at_order(
        &self,
        prev: &HeckeElement<Rational>,
        contents: &[Rational],
        order: usize,
    ) -> Result<HeckeElement<Rational>> {
        let k = contents.len();
        let ck = &contents[k - 1];
        let u = TruncLaurent::truncated(0, vec![ck.clone(), Rational::one()], order);
        let prior: Vec<TruncLaurent> = contents[..k - 1].iter().map(TruncLaurent::lift).collect();
        let (factors, scalar) = self.factors(&prior, &u)?;
        let den = TruncLaurent::lift(&(&self.c * ck)) * &u - &TruncLaurent::one();
        let pre = div(&TruncLaurent::h(), &den, "c u c_k = 1")?;
        let mut acc: HeckeElement<TruncLaurent> = prev.lift();
        for (i, a, b) in &factors {
            acc = self.alg.mul_linear(&acc, *i, a, b);
        }
        let total = pre * &scalar;
        acc.try_map(|x| (x.clone() * &total).constant_term())
    }

    fn step(&self, prev: &HeckeElement<Rational>, contents: &[Rational]) -> Result<HeckeElement<Rational>> {
        let mut order = 2;
        loop {
            match self.step_at_order(prev, contents, order) {
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

    /// Consecutive evaluation on the contents of a standard tableau.
    pub fn idempotent(&self, u: &UpDownTableau) -> Result<HeckeElement<Rational>> {
        if !u.is_standard() {
            return Err(Error::Invalid(format!("{} removes a box", u.encode())));
        }
        if u.len() != self.alg.n {
            return Err(Error::Invalid(format!("tableau of length {} in H_{}", u.len(), self.alg.n)));
        }
        let q = &self.alg.q;
        let contents = quantum_contents_in(u, q, q)?;
        let mut e = self.alg.one();
        for k in 1..=u.len() {
            e = self.step(&e, &contents[..k])?;
        }
        Ok(e)
    }
}

/// Sampled values of the free parameter, including `c = 0`.
pub fn sample_cs() -> Vec<Rational> {
    vec![rat(0, 1), rat(1, 2), rat(-2, 3), rat(3, 7), rat(-35, 18)]
}

/// Idempotency, orthogonality and completeness of a family over all standard
/// tableaux, for each sampled `c`, together with `c`-independence.
pub fn family_report(alg: &Hecke, cs: &[Rational], form: InverseForm) -> Result<Report> {
    let mut report = Report::new("hecke family");
    let tableaux = enumerate_standard(alg.n)?;
    let mut first: Option<Vec<HeckeElement<Rational>>> = None;
    for c in cs {
        let fam = HeckeFamily {
            alg,
            c: c.clone(),
            form,
        };
        let tag = format!("c={}", rational_to_string(c));
        let mut sys = Vec::new();
        for u in &tableaux {
            match fam.idempotent(u) {
                Ok(e) => sys.push(e),
                Err(err) => {
                    report.record_error("family evaluation", format!("{tag}, {}", u.encode()), &err);
                    sys.push(alg.zero());
                }
            }
        }
        let mut sum = alg.zero();
        for (a, ea) in sys.iter().enumerate() {
            let name = format!("{tag}, {}", tableaux[a].encode());
            report.record("E E = E", name.clone(), alg.mul(ea, ea) == *ea && !ea.is_zero());
            for (b, eb) in sys.iter().enumerate() {
                if a != b {
                    let inst = format!("{tag}, {} x {}", tableaux[a].encode(), tableaux[b].encode());
                    report.record("E_U E_V = 0", inst, alg.mul(ea, eb).is_zero());
                }
            }
            sum = sum.add(ea);
        }
        report.record("sum of E_U = 1", tag.clone(), sum == alg.one());
        match &first {
            None => first = Some(sys),
            Some(f) => report.record("independent of c", tag, *f == sys),
        }
    }
    Ok(report)
}

/// The family at the BMW value of `c` against the quotient of the BMW fusion
/// output, on every standard tableau.
pub fn quotient_report(ctx: &Context<Rational>, alg: &Hecke) -> Result<Report> {
    use crate::fusion::{fusion_idempotent, Baxter};
    let mut report = Report::new("hecke quotient");
    let bax = Baxter::of(ctx);
    let fam = HeckeFamily {
        alg,
        c: ctx.params().c.clone(),
        form: InverseForm::Substituted,
    };
    for u in enumerate_standard(alg.n)? {
        let bmw = fusion_idempotent(ctx, &bax, &u)?;
        let image = alg.quotient(ctx, &bmw.element)?;
        report.record("family = quotient of BMW fusion", u.encode(), fam.idempotent(&u)? == image);
    }
    Ok(report)
}
