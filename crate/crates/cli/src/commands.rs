use std::path::Path;

use bmw_fusion::bmw::{cache, element_to_json, verify_relations, Context};
use bmw_fusion::combinatorics::{
    classical_contents, enumerate_tableaux, quantum_contents, ContentFlavor, UpDownTableau,
};
use bmw_fusion::contraction::{brauer_system, contraction_report, Regime};
use bmw_fusion::fusion::symmetrizers::{self, Form, Kind};
use bmw_fusion::fusion::{
    baxter_suite, complete_system, equivalence_report, fusion_idempotent, jm_oracle_idempotent, reflection_suite,
    row_tableau, starred_report, symmetrizer_report, system_report, Baxter, Idempotent, Method,
};
use bmw_fusion::hecke::{family_report, quotient_report, sample_cs, Hecke, HeckeFamily, InverseForm};
use bmw_fusion::report::Report;
use bmw_fusion::scalars::{
    default_q_nu, make_params, parse_rational, rational_to_string, suggest_params, ParamSet, Rational,
};
use bmw_fusion::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{AlgebraArgs, CacheAction, Cli, Command, ContentsArg, ExportKind, MethodArg, ParamsAction, Suite};

pub enum Outcome {
    Pass,
    Fail,
    Error(Error),
}

impl From<Result<bool>> for Outcome {
    fn from(r: Result<bool>) -> Self {
        match r {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail,
            Err(e) => Outcome::Error(e),
        }
    }
}

/// 2 for bad or non-generic input, 3 for everything else.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotGeneric(_)
        | Error::Invalid(_)
        | Error::Parse(_)
        | Error::CapExceeded { .. }
        | Error::IndexOutOfRange { .. } => 2,
        _ => 3,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Idempotents {
            alg,
            method,
            tableau,
            out,
        } => idempotents(cli, alg, *method, tableau, out.as_deref()),
        Command::Verify {
            alg,
            suite,
            samples,
            omega,
            order,
            json,
        } => verify(cli, alg, *suite, *samples, omega, *order, json.as_deref()),
        Command::Tableaux {
            alg,
            contents,
            omega,
            json,
        } => tableaux(alg, *contents, omega, *json),
        Command::Symmetrizers { alg, out } => symmetrizers_cmd(cli, alg, out.as_deref()),
        Command::Params {
            action: ParamsAction::Suggest { n },
        } => suggest_params(*n).and_then(|p| {
            emit(&params_json(&p), None)?;
            Ok(true)
        }),
        Command::Export {
            alg,
            kind,
            omega,
            regime,
            out,
        } => export(cli, alg, *kind, omega, *regime, out.as_deref()),
        Command::Cache { action } => cache_cmd(cli, action),
    };
    r.into()
}

fn emit(v: &Value, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v).map_err(|e| Error::Invalid(e.to_string()))?;
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Invalid(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn params_json(p: &ParamSet) -> Value {
    json!({
        "q": rational_to_string(&p.q),
        "nu": rational_to_string(&p.nu),
        "c": rational_to_string(&p.c),
        "mu": rational_to_string(&p.mu),
        "certified_n": p.certified_n,
    })
}

fn params(alg: &AlgebraArgs) -> Result<ParamSet> {
    match (&alg.q, &alg.nu) {
        (None, None) => {
            let (q, nu) = default_q_nu();
            make_params(q, nu, alg.n).or_else(|_| suggest_params(alg.n))
        }
        (q, nu) => {
            let (dq, dnu) = default_q_nu();
            let q = q.as_deref().map(parse_rational).transpose()?.unwrap_or(dq);
            let nu = nu.as_deref().map(parse_rational).transpose()?.unwrap_or(dnu);
            make_params(q, nu, alg.n)
        }
    }
}

fn context(cli: &Cli, alg: &AlgebraArgs) -> Result<Context<Rational>> {
    let p = params(alg)?;
    let dir = cache::resolve_dir(cli.cache_dir.as_deref());
    Ok(cache::load_or_build(alg.n, &p, dir.as_deref())?.0)
}

fn record_checks(ctx: &Context<Rational>, e: &Idempotent) -> Value {
    let x = &e.element;
    let idempotent = ctx.mul(x, x) == *x;
    let jm = (1..=ctx.n()).all(|k| {
        let target = x.scale(&e.contents[k - 1]);
        ctx.mul_jm(x, k) == target && ctx.rho(&ctx.mul_jm(&ctx.rho(x), k)) == target
    });
    json!({
        "idempotent": idempotent,
        "jm_diagonal": jm,
        "rho_invariant": ctx.rho(x) == *x,
        "nonzero": !x.is_zero(),
    })
}

fn idempotents(
    cli: &Cli,
    alg: &AlgebraArgs,
    method: MethodArg,
    chosen: &[String],
    out: Option<&Path>,
) -> Result<bool> {
    let ctx = context(cli, alg)?;
    let all = chosen.is_empty();
    let tableaux = if all {
        enumerate_tableaux(alg.n)?
    } else {
        chosen.iter().map(|s| UpDownTableau::parse(s)).collect::<Result<Vec<_>>>()?
    };
    let bax = Baxter::of(&ctx);
    let method = match method {
        MethodArg::Fusion => Method::Fusion,
        MethodArg::Jm => Method::JmOracle,
    };
    let system: Vec<Idempotent> = tableaux
        .par_iter()
        .map(|u| match method {
            Method::Fusion => fusion_idempotent(&ctx, &bax, u),
            Method::JmOracle => jm_oracle_idempotent(&ctx, u),
        })
        .collect::<Result<_>>()?;
    let checks: Vec<Value> = system.par_iter().map(|e| record_checks(&ctx, e)).collect();
    let orthogonal = (0..system.len()).into_par_iter().all(|a| {
        (0..system.len()).all(|b| a == b || ctx.mul(&system[a].element, &system[b].element).is_zero())
    });
    let complete = all.then(|| system.iter().fold(ctx.zero(), |acc, e| acc.add(&e.element)) == ctx.one());
    let mut ok = orthogonal && complete.unwrap_or(true);
    let records: Vec<Value> = system
        .iter()
        .zip(checks)
        .map(|(e, c)| {
            ok &= c.as_object().unwrap().values().all(|v| v == &Value::Bool(true));
            let mut r = e.to_json(&ctx);
            r["checks"] = c;
            r
        })
        .collect();
    let doc = json!({
        "n": alg.n,
        "params": params_json(ctx.params()),
        "method": method.name(),
        "records": records,
        "orthogonal": orthogonal,
        "sum_is_one": complete,
        "passed": ok,
    });
    emit(&doc, out)?;
    Ok(ok)
}

fn fusion_reports(ctx: &Context<Rational>, seed: u64, samples: usize) -> Result<Vec<Report>> {
    let fused = complete_system(ctx, Method::Fusion)?;
    let oracle = complete_system(ctx, Method::JmOracle)?;
    let mut out = vec![
        system_report(ctx, &fused),
        equivalence_report(&fused, &oracle),
        baxter_suite(ctx, seed, samples),
        symmetrizer_report(ctx)?,
    ];
    if ctx.n() <= 3 {
        out.push(starred_report(ctx)?);
    }
    Ok(out)
}

fn verify(
    cli: &Cli,
    alg: &AlgebraArgs,
    suite: Suite,
    samples: usize,
    omega: &str,
    order: usize,
    json_out: Option<&Path>,
) -> Result<bool> {
    let ctx = context(cli, alg)?;
    let omega = parse_rational(omega)?;
    let want = |s: Suite| suite == s || suite == Suite::All;
    let mut reports = Vec::new();
    if want(Suite::Relations) {
        reports.push(verify_relations(&ctx)?);
    }
    if want(Suite::Fusion) {
        reports.extend(fusion_reports(&ctx, cli.seed, samples)?);
    }
    if want(Suite::Reflection) {
        reports.push(reflection_suite(&ctx, cli.seed, samples));
    }
    if want(Suite::Hecke) {
        let h = Hecke::new(alg.n, ctx.params().q.clone())?;
        reports.push(family_report(&h, &sample_cs(), InverseForm::Substituted)?);
        reports.push(quotient_report(&ctx, &h)?);
    }
    if want(Suite::Contraction) {
        reports.push(contraction_report(alg.n, &omega, cli.seed, samples, order));
    }
    for r in &reports {
        print!("{}", r.summary());
        if let Some(f) = r.first_failure() {
            println!("  first failure: {} [{}] {}", f.relation, f.instance, f.detail.as_deref().unwrap_or(""));
        }
    }
    let ok = reports.iter().all(Report::passed);
    println!("{}", if ok { "PASS" } else { "FAIL" });
    if let Some(p) = json_out {
        let doc = json!({
            "n": alg.n,
            "params": params_json(ctx.params()),
            "seed": cli.seed,
            "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            "passed": ok,
        });
        emit(&doc, Some(p))?;
    }
    Ok(ok)
}

fn tableaux(alg: &AlgebraArgs, contents: ContentsArg, omega: &str, as_json: bool) -> Result<bool> {
    let omega = parse_rational(omega)?;
    let p = params(alg)?;
    let rows = enumerate_tableaux(alg.n)?
        .into_iter()
        .map(|u| {
            let values = match contents {
                ContentsArg::Quantum => quantum_contents(&u, &p).values,
                ContentsArg::Classical => classical_contents(&u, &omega, ContentFlavor::Classical)?.values,
                ContentsArg::TClassical => classical_contents(&u, &omega, ContentFlavor::TClassical)?.values,
            };
            Ok((u.encode(), values.iter().map(rational_to_string).collect::<Vec<_>>()))
        })
        .collect::<Result<Vec<_>>>()?;
    if as_json {
        let v: Vec<Value> = rows.iter().map(|(t, c)| json!({"tableau": t, "contents": c})).collect();
        emit(&Value::Array(v), None)?;
    } else {
        for (t, c) in rows {
            println!("{t}\t{}", c.join(" "));
        }
    }
    Ok(true)
}

fn symmetrizers_cmd(cli: &Cli, alg: &AlgebraArgs, out: Option<&Path>) -> Result<bool> {
    let ctx = context(cli, alg)?;
    let bax = Baxter::of(&ctx);
    let n = alg.n;
    let mut doc = serde_json::Map::new();
    let mut ok = true;
    for (name, kind) in [("S", Kind::Symmetrizer), ("A", Kind::Antisymmetrizer)] {
        let chain = symmetrizers::build(&ctx, kind, Form::Chain, n)?;
        let prod = symmetrizers::build(&ctx, kind, Form::YProduct, n)?;
        let fused = fusion_idempotent(&ctx, &bax, &row_tableau(n, kind)?)?.element;
        let equal = chain == prod && chain == fused;
        ok &= equal;
        doc.insert(
            name.to_string(),
            json!({
                "chain": element_to_json(&ctx, &chain),
                "y_product": element_to_json(&ctx, &prod),
                "equal": equal,
            }),
        );
    }
    doc.insert("n".into(), json!(n));
    doc.insert("passed".into(), json!(ok));
    emit(&Value::Object(doc), out)?;
    Ok(ok)
}

fn export(
    cli: &Cli,
    alg: &AlgebraArgs,
    kind: ExportKind,
    omega: &str,
    regime: u8,
    out: Option<&Path>,
) -> Result<bool> {
    let doc = match kind {
        ExportKind::Words => {
            let ctx = context(cli, alg)?;
            let words: Vec<Value> = (0..ctx.dim())
                .map(|w| json!(ctx.word_letters(w).iter().map(|l| l.to_string()).collect::<Vec<_>>()))
                .collect();
            json!({"algebra": "bmw", "n": alg.n, "params": params_json(ctx.params()), "dim": ctx.dim(), "words": words})
        }
        ExportKind::Hecke => {
            let p = params(alg)?;
            let h = Hecke::new(alg.n, p.q.clone())?;
            let fam = HeckeFamily {
                alg: &h,
                c: p.c.clone(),
                form: InverseForm::Substituted,
            };
            let records = bmw_fusion::combinatorics::enumerate_standard(alg.n)?
                .iter()
                .map(|u| Ok(json!({"tableau": u.encode(), "element": h.to_json(&fam.idempotent(u)?)})))
                .collect::<Result<Vec<_>>>()?;
            json!({"n": alg.n, "c": rational_to_string(&p.c), "records": records})
        }
        ExportKind::Brauer => {
            let omega = parse_rational(omega)?;
            let regime = Regime::from_number(regime)?;
            let b = bmw_fusion::brauer::Brauer::new(alg.n, omega.clone())?;
            let records: Vec<Value> = brauer_system(regime, alg.n, &omega, 4)?
                .iter()
                .map(|(u, e)| json!({"tableau": u.encode(), "element": b.to_json(e)}))
                .collect();
            json!({"n": alg.n, "regime": regime.number(), "omega": rational_to_string(&omega), "records": records})
        }
    };
    emit(&doc, out)?;
    Ok(true)
}

fn cache_cmd(cli: &Cli, action: &CacheAction) -> Result<bool> {
    let dir = cache::resolve_dir(cli.cache_dir.as_deref())
        .ok_or_else(|| Error::Invalid(format!("no cache directory: pass --cache-dir or set {}", cache::CACHE_ENV)))?;
    match action {
        CacheAction::Info => {
            let files = cache::list(&dir)?;
            println!("{}: {} files", dir.display(), files.len());
            for (p, size) in files {
                println!("{size}\t{}", p.file_name().unwrap_or_default().to_string_lossy());
            }
        }
        CacheAction::Clear => {
            let k = cache::clear(&dir)?;
            println!("removed {k} files from {}", dir.display());
        }
    }
    Ok(true)
}
