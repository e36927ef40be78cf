use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::idempotent::{fusion_idempotent, jm_oracle_idempotent, Idempotent, Method};
use super::reflection::{check_reflection_l, check_reflection_y};
use super::spectral::{mul_right, Baxter, Linear};
use super::symmetrizers::{self, Form, Kind};
use crate::bmw::{Context, Element};
use crate::combinatorics::{enumerate_tableaux, UpDownTableau};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{rat, Rational};

/// Tuples per identity in the randomized suites.
pub const DEFAULT_SAMPLES: usize = 10;

const MAX_DRAWS: usize = 1000;

/// Small nonzero rationals, reproducible from a seed.
pub struct SpectralSampler {
    rng: ChaCha8Rng,
}

impl SpectralSampler {
    pub fn new(seed: u64) -> Self {
        SpectralSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn draw(&mut self) -> Rational {
        loop {
            let p: i64 = self.rng.gen_range(-9..=9);
            if p != 0 {
                return rat(p, self.rng.gen_range(1..=5));
            }
        }
    }

    pub fn draw_many(&mut self, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.draw()).collect()
    }
}

fn is_singular(e: &Error) -> bool {
    matches!(e, Error::Pole(_) | Error::NonInvertible | Error::DivisionByZero)
}

/// Runs `check` on `count` tuples of `arity` sampled values, redrawing tuples
/// that hit a pole.
fn sampled(
    report: &mut Report,
    sampler: &mut SpectralSampler,
    name: &str,
    arity: usize,
    count: usize,
    mut check: impl FnMut(&[Rational]) -> Result<bool>,
) {
    let mut done = 0;
    let mut draws = 0;
    while done < count {
        draws += 1;
        let xs = sampler.draw_many(arity);
        let inst = xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        match check(&xs) {
            Ok(ok) => {
                report.record(name, inst, ok);
                done += 1;
            }
            Err(e) if is_singular(&e) && draws < MAX_DRAWS => continue,
            Err(e) => {
                report.record_error(name, inst, &e);
                done += 1;
            }
        }
    }
}

fn product(ctx: &Context<Rational>, ls: &[Linear<Rational>]) -> Element<Rational> {
    ls.iter().fold(ctx.one(), |acc, l| mul_right(ctx, &acc, l))
}

/// The braid relation of the baxterized elements, their inverses, the
/// symmetry of `f` and the mixed relation with the `Q`-elements, on random
/// spectral tuples.
pub fn baxter_suite(ctx: &Context<Rational>, seed: u64, count: usize) -> Report {
    let bax = Baxter::of(ctx);
    let mut report = Report::new("baxterized");
    let mut s = SpectralSampler::new(seed);
    let n = ctx.n();
    for i in 1..n {
        sampled(&mut report, &mut s, &format!("T_i(v,u) T_i(u,v) f(u,v) = 1, i={i}"), 2, count, |x| {
            let (u, v) = (&x[0], &x[1]);
            let inv = bax.t_inverse(i, v, u)?;
            let t = bax.t(i, v, u)?;
            let one = ctx.one();
            Ok(product(ctx, &[t.clone(), inv.clone()]) == one && product(ctx, &[inv, t]) == one)
        });
    }
    sampled(&mut report, &mut s, "f(u,v) = f(v,u)", 2, count, |x| {
        Ok(bax.f(&x[0], &x[1])? == bax.f(&x[1], &x[0])?)
    });
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        sampled(&mut report, &mut s, &format!("Yang-Baxter, i={i}"), 3, count, |x| {
            let (u1, u2, u3) = (&x[0], &x[1], &x[2]);
            let lhs = product(ctx, &[bax.t(i, u2, u3)?, bax.t(j, u1, u3)?, bax.t(i, u1, u2)?]);
            let rhs = product(ctx, &[bax.t(j, u1, u2)?, bax.t(i, u1, u3)?, bax.t(j, u2, u3)?]);
            Ok(lhs == rhs)
        });
        sampled(&mut report, &mut s, &format!("T Q Q = Q Q T, i={i}"), 3, count, |x| {
            let (u1, u2, u3) = (&x[0], &x[1], &x[2]);
            let lhs = product(ctx, &[bax.t(i, u2, u3)?, bax.q(j, u1, u3)?, bax.q(i, u1, u2)?]);
            let rhs = product(ctx, &[bax.q(j, u1, u2)?, bax.q(i, u1, u3)?, bax.t(j, u2, u3)?]);
            Ok(lhs == rhs)
        });
    }
    report
}

/// Reflection equations for `L_j(u)` and for `Y_j`, `j <= min(3, n - 1)`.
/// `Y_1` is a scalar, so its equation holds trivially and is skipped.
pub fn reflection_suite(ctx: &Context<Rational>, seed: u64, count: usize) -> Report {
    let bax = Baxter::of(ctx);
    let mut report = Report::new("reflection");
    let mut s = SpectralSampler::new(seed);
    let top = ctx.n().saturating_sub(1).min(3);
    for j in 1..=top {
        sampled(&mut report, &mut s, &format!("L reflection, j={j}"), 2, count, |x| {
            check_reflection_l(ctx, &bax, j, &x[0], &x[1])
        });
        if j > 1 {
            sampled(&mut report, &mut s, &format!("Y reflection, j={j}"), j + 1, count, |x| {
                check_reflection_y(ctx, &bax, &x[..j - 1], &x[j - 1], &x[j])
            });
        }
    }
    report
}

/// All idempotents of `BMW_n`, in tableau enumeration order.
pub fn complete_system(ctx: &Context<Rational>, method: Method) -> Result<Vec<Idempotent>> {
    let tableaux = enumerate_tableaux(ctx.n())?;
    let bax = Baxter::of(ctx);
    tableaux
        .par_iter()
        .map(|u| match method {
            Method::Fusion => fusion_idempotent(ctx, &bax, u),
            Method::JmOracle => jm_oracle_idempotent(ctx, u),
        })
        .collect()
}

/// Idempotency, orthogonality, completeness, Jucys–Murphy eigenvalues and
/// invariance under the anti-automorphism.
pub fn system_report(ctx: &Context<Rational>, system: &[Idempotent]) -> Report {
    let mut report = Report::new("complete system");
    let n = ctx.n();
    let per: Vec<Vec<(String, String, bool)>> = system
        .par_iter()
        .map(|e| {
            let name = e.tableau.encode();
            let x = &e.element;
            let mut out = vec![("E E = E".to_string(), name.clone(), ctx.mul(x, x) == *x)];
            for k in 1..=n {
                let right = ctx.mul_jm(x, k);
                let left = ctx.rho(&ctx.mul_jm(&ctx.rho(x), k));
                let target = x.scale(&e.contents[k - 1]);
                out.push((format!("E y_{k} = y_{k} E = c_{k} E"), name.clone(), right == target && left == target));
            }
            out.push(("rho(E) = E".to_string(), name.clone(), ctx.rho(x) == *x));
            out.push(("E != 0".to_string(), name, !x.is_zero()));
            out
        })
        .collect();
    for rows in per {
        for (r, i, ok) in rows {
            report.record(r, i, ok);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..system.len())
        .flat_map(|a| (0..system.len()).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let orth: Vec<bool> = pairs
        .par_iter()
        .map(|&(a, b)| ctx.mul(&system[a].element, &system[b].element).is_zero())
        .collect();
    for (&(a, b), ok) in pairs.iter().zip(orth) {
        let inst = format!("{} x {}", system[a].tableau.encode(), system[b].tableau.encode());
        report.record("E_U E_V = 0", inst, ok);
    }
    let sum = system.iter().fold(ctx.zero(), |acc, e| acc.add(&e.element));
    report.record("sum of E_U = 1", format!("n={n}, {} tableaux", system.len()), sum == ctx.one());
    report
}

/// Fusion against the Jucys–Murphy interpolation, tableau by tableau.
pub fn equivalence_report(fusion: &[Idempotent], oracle: &[Idempotent]) -> Report {
    let mut report = Report::new("fusion = jm-oracle");
    for (a, b) in fusion.iter().zip(oracle) {
        report.record("fusion = jm-oracle", a.tableau.encode(), a.tableau == b.tableau && a.element == b.element);
    }
    if fusion.len() != oracle.len() {
        report.record("fusion = jm-oracle", "system sizes", false);
    }
    report
}

/// The fusion run with the starred baxterized elements yields the idempotent
/// of the transposed tableau.
pub fn starred_report(ctx: &Context<Rational>) -> Result<Report> {
    let mut report = Report::new("starred transposition");
    let star = Baxter::starred(ctx)?;
    let tableaux = enumerate_tableaux(ctx.n())?;
    let rows: Vec<(String, Result<bool>)> = tableaux
        .par_iter()
        .map(|u| {
            let ok = (|| {
                let e = fusion_idempotent(ctx, &star, u)?;
                let t = jm_oracle_idempotent(ctx, &u.transpose())?;
                Ok(e.element == t.element)
            })();
            (u.encode(), ok)
        })
        .collect();
    for (name, ok) in rows {
        match ok {
            Ok(ok) => report.record("starred fusion on U = E of transpose(U)", name, ok),
            Err(e) => report.record_error("starred fusion on U = E of transpose(U)", name, &e),
        }
    }
    Ok(report)
}

/// The row (or column) tableau of length `n`.
pub fn row_tableau(n: usize, kind: Kind) -> Result<UpDownTableau> {
    let shapes = (1..=n)
        .map(|k| match kind {
            Kind::Symmetrizer => k.to_string(),
            Kind::Antisymmetrizer => vec!["1"; k].join(","),
        })
        .collect::<Vec<_>>()
        .join(";");
    UpDownTableau::parse(&shapes)
}

/// Chain form, product form and fusion output of `S_m` and `A_m` for all
/// `2 <= m <= n`, with their eigen-relations and prefactors.
pub fn symmetrizer_report(ctx: &Context<Rational>) -> Result<Report> {
    let mut report = Report::new("symmetrizers");
    let bax = Baxter::of(ctx);
    for m in 2..=ctx.n() {
        for kind in [Kind::Symmetrizer, Kind::Antisymmetrizer] {
            let label = match kind {
                Kind::Symmetrizer => format!("S_{m}"),
                Kind::Antisymmetrizer => format!("A_{m}"),
            };
            let chain = symmetrizers::build(ctx, kind, Form::Chain, m)?;
            let prod = symmetrizers::build(ctx, kind, Form::YProduct, m)?;
            let fused = if m == ctx.n() {
                fusion_idempotent(ctx, &bax, &row_tableau(m, kind)?)?.element
            } else {
                prod.clone()
            };
            report.record("chain = Y-product", label.clone(), chain == prod);
            if m == ctx.n() {
                report.record("chain = fusion", label.clone(), chain == fused);
            }
            report.record("eigen-relations", label.clone(), symmetrizers::eigen_relations_hold(ctx, kind, &chain, m)?);
            report.record("E E = E", label.clone(), ctx.mul(&chain, &chain) == chain);
            let us = symmetrizers::row_contents(ctx, kind, m);
            let eval = symmetrizers::prefactor_by_evaluation(&bax, &us)?;
            let closed = symmetrizers::prefactor_closed_form(ctx, kind, m)?;
            report.record("prefactor closed form = evaluation", label, eval == closed);
        }
    }
    Ok(report)
}
