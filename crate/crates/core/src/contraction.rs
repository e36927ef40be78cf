//! Classical contractions `BMW_n -> B_n(omega)` as `h -> 0`.
//!
//! Parameters become truncated Laurent series in `h`; a BMW element whose
//! coefficients are regular at `h = 0` maps to the Brauer element obtained
//! from the constant terms under `T_i -> sigma s_i`, `K_i -> eps_i`, where
//! `sigma` is the limit of `nu`.

use std::fmt;

use crate::bmw::{Context, Element};
use crate::brauer::{Brauer, BrauerElement};
use crate::combinatorics::{enumerate_tableaux, UpDownTableau};
use crate::error::{Error, Result};
use crate::fusion::{jm_projector, Baxter, SpectralSampler};
use crate::report::Report;
use crate::scalars::{rat, Couplings, One, Rational, TruncLaurent, Zero};

/// Default truncation order for contraction checks.
pub const DEFAULT_ORDER: usize = 4;

const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `q = e^h`, `nu = e^{h(1-omega)}`.
    One,
    /// `q = -e^h`, `nu = e^{h(omega-1)}`.
    Two,
    /// `q = e^h`, `nu = -e^{h(omega-1)}`.
    Three,
    /// `q = -e^h`, `nu = -e^{h(1-omega)}`.
    Four,
}

impl Regime {
    pub const ALL: [Regime; 4] = [Regime::One, Regime::Two, Regime::Three, Regime::Four];

    pub fn number(&self) -> u8 {
        match self {
            Regime::One => 1,
            Regime::Two => 2,
            Regime::Three => 3,
            Regime::Four => 4,
        }
    }

    pub fn from_number(k: u8) -> Result<Self> {
        match k {
            1 => Ok(Regime::One),
            2 => Ok(Regime::Two),
            3 => Ok(Regime::Three),
            4 => Ok(Regime::Four),
            _ => Err(Error::Invalid(format!("no contraction regime {k}"))),
        }
    }

    /// `(q, nu)` to `order` terms.
    pub fn q_nu(&self, omega: &Rational, order: usize) -> (TruncLaurent, TruncLaurent) {
        let e = |r: Rational| TruncLaurent::exp_h(&r, order);
        let one = Rational::one();
        let (q_sign, nu_sign, nu_exp) = match self {
            Regime::One => (1, 1, &one - omega),
            Regime::Two => (-1, 1, omega - &one),
            Regime::Three => (1, -1, omega - &one),
            Regime::Four => (-1, -1, &one - omega),
        };
        let signed = |s: i64, x: TruncLaurent| if s < 0 { -x } else { x };
        (signed(q_sign, e(one.clone())), signed(nu_sign, e(nu_exp)))
    }

    /// The image of `T_i` is `sign * s_i`.
    pub fn sign(&self) -> Rational {
        match self {
            Regime::One | Regime::Two => Rational::one(),
            Regime::Three | Regime::Four => -Rational::one(),
        }
    }

    /// Spectral parameter attached to a classical (regime 1) or t-classical
    /// (regime 2) content.
    pub fn spectral(&self, theta: &Rational, omega: &Rational, order: usize) -> Result<TruncLaurent> {
        let half = (omega - Rational::one()) / rat(2, 1);
        let r = match self {
            Regime::One => (theta - &half) * rat(2, 1),
            Regime::Two => (half - theta) * rat(2, 1),
            _ => return Err(no_limits(*self)),
        };
        Ok(TruncLaurent::exp_h(&r, order))
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

fn no_limits(r: Regime) -> Error {
    Error::Invalid(format!("regime {r} has no fusion-function limits"))
}

/// Retries `f` at doubled truncation orders while precision runs out.
pub fn at_sufficient_order<T>(start: usize, mut f: impl FnMut(usize) -> Result<T>) -> Result<T> {
    let mut order = start.max(2);
    loop {
        match f(order) {
            Err(Error::PrecisionExhausted(_)) if order < MAX_ORDER => order *= 2,
            other => return other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Q,
    T,
}

impl BlockKind {
    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::Q => "Q",
            BlockKind::T => "T",
        }
    }
}

/// The limit `sign s_i + a + c eps_i` of a block, as `(a, c)`.
pub fn block_limit(
    regime: Regime,
    kind: BlockKind,
    theta1: &Rational,
    theta2: &Rational,
    omega: &Rational,
    order: usize,
) -> Result<(Rational, Rational)> {
    at_sufficient_order(order, |order| {
        let (q, nu) = regime.q_nu(omega, order);
        let bax = Baxter::new(Couplings::from_q_nu(q, nu)?);
        let u1 = regime.spectral(theta1, omega, order)?;
        let u2 = regime.spectral(theta2, omega, order)?;
        let l = match kind {
            BlockKind::Q => bax.q(1, &u1, &u2)?,
            BlockKind::T => bax.t(1, &u1, &u2)?,
        };
        Ok((l.a.constant_term()?, l.c.constant_term()?))
    })
}

/// The stated limits, as `(a, c)`.
pub fn expected_block(
    regime: Regime,
    kind: BlockKind,
    theta1: &Rational,
    theta2: &Rational,
    omega: &Rational,
) -> Result<(Rational, Rational)> {
    let inv = |x: Rational| {
        if x.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(x.recip())
        }
    };
    let kappa = omega / rat(2, 1) - Rational::one();
    let (sum, diff) = (theta1 + theta2, theta1 - theta2);
    match (regime, kind) {
        (Regime::One, BlockKind::Q) => Ok((Rational::zero(), -inv(sum)?)),
        (Regime::One, BlockKind::T) => Ok((-inv(diff)?, Rational::zero())),
        (Regime::Two, BlockKind::Q) => Ok((inv(sum.clone() - &kappa)?, -inv(sum)?)),
        (Regime::Two, BlockKind::T) => Ok((-inv(diff.clone())?, inv(diff - &kappa)?)),
        (r, _) => Err(no_limits(r)),
    }
}

/// `sign s_i + a + c eps_i`.
pub fn block_element(brauer: &Brauer, regime: Regime, i: usize, a: &Rational, c: &Rational) -> Result<BrauerElement> {
    Ok(brauer
        .s(i)?
        .scale(&regime.sign())
        .add_scalar(a)
        .add(&brauer.eps(i)?.scale(c)))
}

/// Compares the contracted block at position `i` with its stated limit.
pub fn contraction_block_check(
    brauer: &Brauer,
    regime: Regime,
    kind: BlockKind,
    i: usize,
    theta1: &Rational,
    theta2: &Rational,
    order: usize,
) -> Result<bool> {
    let omega = brauer.omega();
    let (a, c) = block_limit(regime, kind, theta1, theta2, omega, order)?;
    let (ea, ec) = expected_block(regime, kind, theta1, theta2, omega)?;
    Ok(block_element(brauer, regime, i, &a, &c)? == block_element(brauer, regime, i, &ea, &ec)?)
}

/// `BMW_n` over Laurent parameters of one regime together with the target
/// Brauer algebra.
pub struct Contraction {
    regime: Regime,
    order: usize,
    ctx: Context<TruncLaurent>,
    brauer: Brauer,
    images: Vec<BrauerElement>,
}

impl Contraction {
    pub fn new(regime: Regime, n: usize, omega: &Rational, order: usize) -> Result<Self> {
        let (q, nu) = regime.q_nu(omega, order);
        let ctx = Context::build_over(n, Couplings::from_q_nu(q, nu)?)?;
        let brauer = Brauer::new(n, omega.clone())?;
        let sign = regime.sign();
        let images = (0..ctx.dim())
            .map(|w| brauer.word_image(&ctx.word_letters(w), &sign))
            .collect::<Result<Vec<_>>>()?;
        Ok(Contraction {
            regime,
            order,
            ctx,
            brauer,
            images,
        })
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn context(&self) -> &Context<TruncLaurent> {
        &self.ctx
    }

    pub fn brauer(&self) -> &Brauer {
        &self.brauer
    }

    /// Constant terms, mapped into the Brauer algebra.
    pub fn to_brauer(&self, x: &Element<TruncLaurent>) -> Result<BrauerElement> {
        let mut out = self.brauer.zero();
        for (w, c) in x.terms() {
            let k = c.constant_term()?;
            if !k.is_zero() {
                out = out.add(&self.images[w].scale(&k));
            }
        }
        Ok(out)
    }

    /// Whether the constant terms of `w1 * w2` match the Brauer product of the
    /// images, for every pair of canonical words.  Returns the failing pairs.
    pub fn structure_constant_failures(&self) -> Result<Vec<(usize, usize)>> {
        let mut bad = Vec::new();
        for a in 0..self.ctx.dim() {
            let x = Element::monomial(self.ctx.n(), a, TruncLaurent::one());
            for b in 0..self.ctx.dim() {
                let y = Element::monomial(self.ctx.n(), b, TruncLaurent::one());
                let got = self.to_brauer(&self.ctx.mul(&x, &y))?;
                if got != self.brauer.mul(&self.images[a], &self.images[b]) {
                    bad.push((a, b));
                }
            }
        }
        Ok(bad)
    }

    /// Whether the images of the canonical words are linearly independent,
    /// i.e. the contraction is onto `B_n(omega)`.
    pub fn images_span(&self) -> bool {
        crate::linalg::rank(&self.images) == self.brauer.dim()
    }

    /// The Jucys–Murphy projector of `u` over this context, contracted.
    pub fn idempotent(&self, u: &UpDownTableau) -> Result<BrauerElement> {
        if matches!(self.regime, Regime::Three | Regime::Four) {
            return Err(no_limits(self.regime));
        }
        let cp = self.ctx.couplings();
        let e = jm_projector(&self.ctx, u, &cp.q, &cp.nu)?;
        self.to_brauer(&e)
    }
}

/// Brauer idempotents of all up-down tableaux of length `n`, as limits of the
/// BMW idempotents in regime 1 or 2.
pub fn brauer_system(
    regime: Regime,
    n: usize,
    omega: &Rational,
    order: usize,
) -> Result<Vec<(UpDownTableau, BrauerElement)>> {
    let tableaux = enumerate_tableaux(n)?;
    at_sufficient_order(order, |order| {
        let con = Contraction::new(regime, n, omega, order)?;
        tableaux
            .iter()
            .map(|u| Ok((u.clone(), con.idempotent(u)?)))
            .collect()
    })
}

/// Single Brauer idempotent as a limit.
pub fn brauer_idempotent(
    u: &UpDownTableau,
    regime: Regime,
    omega: &Rational,
    order: usize,
) -> Result<BrauerElement> {
    at_sufficient_order(order, |order| {
        Contraction::new(regime, u.len(), omega, order)?.idempotent(u)
    })
}

/// Block limits on random `(theta1, theta2, omega)`, both regimes and both
/// block kinds at every position `i < n`.
pub fn block_report(n: usize, seed: u64, count: usize, order: usize) -> Report {
    let mut report = Report::new("contraction blocks");
    let mut s = SpectralSampler::new(seed);
    let mut done = 0;
    while done < count {
        let (t1, t2, omega) = (s.draw(), s.draw(), s.draw());
        let admissible = [Regime::One, Regime::Two].iter().all(|&r| {
            [BlockKind::Q, BlockKind::T]
                .iter()
                .all(|&k| expected_block(r, k, &t1, &t2, &omega).is_ok())
        });
        if !admissible {
            continue;
        }
        done += 1;
        let brauer = match Brauer::new(n.max(2), omega.clone()) {
            Ok(b) => b,
            Err(e) => {
                report.record_error("block limit", "Brauer algebra", &e);
                continue;
            }
        };
        for regime in [Regime::One, Regime::Two] {
            for kind in [BlockKind::Q, BlockKind::T] {
                for i in 1..brauer.n() {
                    let rel = format!("regime {regime}, {} block", kind.name());
                    let inst = format!("i={i}, theta=({t1}, {t2}), omega={omega}");
                    match contraction_block_check(&brauer, regime, kind, i, &t1, &t2, order) {
                        Ok(ok) => report.record(rel, inst, ok),
                        Err(e) => report.record_error(rel, inst, &e),
                    }
                }
            }
        }
    }
    report
}

/// Structure constants of every regime contract to the Brauer product.
pub fn structure_report(n: usize, omega: &Rational, order: usize) -> Report {
    let mut report = Report::new("contraction structure constants");
    for regime in Regime::ALL {
        let rel = format!("regime {regime}: h^0 structure constants = Brauer product");
        let inst = format!("n={n}, omega={omega}");
        let run = at_sufficient_order(order, |order| {
            let con = Contraction::new(regime, n, omega, order)?;
            Ok((con.structure_constant_failures()?, con.images_span()))
        });
        match run {
            Ok((bad, span)) => {
                report.record(rel, inst.clone(), bad.is_empty());
                report.record(format!("regime {regime}: word images span B_n"), inst, span);
            }
            Err(e) => report.record_error(rel, inst, &e),
        }
    }
    report
}

/// Idempotency, orthogonality and completeness of the contracted systems, and
/// the transposition relating the two regimes.
pub fn idempotent_report(n: usize, omega: &Rational, order: usize) -> Report {
    let mut report = Report::new("contraction idempotents");
    let inst = format!("n={n}, omega={omega}");
    let systems = [Regime::One, Regime::Two].map(|r| (r, brauer_system(r, n, omega, order)));
    let brauer = match Brauer::new(n, omega.clone()) {
        Ok(b) => b,
        Err(e) => {
            report.record_error("Brauer algebra", inst, &e);
            return report;
        }
    };
    for (regime, sys) in &systems {
        match sys {
            Ok(sys) => {
                let elems: Vec<BrauerElement> = sys.iter().map(|(_, e)| e.clone()).collect();
                let (idem, orth, complete) = brauer.system_holds(&elems);
                report.record(format!("regime {regime}: E E = E"), inst.clone(), idem);
                report.record(format!("regime {regime}: E_U E_V = 0"), inst.clone(), orth);
                report.record(format!("regime {regime}: sum of E_U = 1"), inst.clone(), complete);
            }
            Err(e) => report.record_error(format!("regime {regime}: system"), inst.clone(), e),
        }
    }
    if let (Ok(one), Ok(two)) = (&systems[0].1, &systems[1].1) {
        for (u, e2) in two {
            let t = u.transpose();
            let e1 = one.iter().find(|(v, _)| *v == t).map(|(_, e)| e);
            report.record("regime 2 on U = regime 1 on transpose(U)", u.encode(), e1 == Some(e2));
        }
    }
    report
}

/// Blocks, structure constants and idempotents.
pub fn contraction_report(n: usize, omega: &Rational, seed: u64, count: usize, order: usize) -> Report {
    let mut report = Report::new("contraction");
    report.extend(block_report(n, seed, count, order));
    report.extend(structure_report(n, omega, order));
    report.extend(idempotent_report(n, omega, order));
    report
}
