use std::process::ExitCode;
use std::time::Instant;

use bmw_fusion::bmw::{Context, Element, Letter};
use bmw_fusion::brauer::Brauer;
use bmw_fusion::combinatorics::{double_factorial_odd, enumerate_tableaux, UpDownTableau};
use bmw_fusion::contraction::{block_report, idempotent_report, structure_report, DEFAULT_ORDER};
use bmw_fusion::fusion::{
    baxter_suite, complete_system, equivalence_report, fusion_idempotent, reflection_suite, symmetrizer_report,
    system_report, Baxter, Method, DEFAULT_SAMPLES,
};
use bmw_fusion::hecke::{family_report, quotient_report, sample_cs, Hecke, InverseForm};
use bmw_fusion::report::Report;
use bmw_fusion::scalars::{default_q_nu, make_params, rat, Rational};
use bmw_fusion::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Set to run the n = 5 complete system as well.
const STRETCH_ENV: &str = "BMWF_STRETCH";

fn ctx(n: usize) -> Result<Context<Rational>> {
    let (q, nu) = default_q_nu();
    Context::build(n, &make_params(q, nu, n)?)
}

fn all_pass(reports: &[Report]) -> (bool, String) {
    let total: usize = reports.iter().map(Report::total).sum();
    let failed: usize = reports.iter().map(Report::failures).sum();
    let mut detail = format!("{total} checks, {failed} failed");
    if let Some(f) = reports.iter().find_map(Report::first_failure) {
        detail.push_str(&format!("; first: {} [{}]", f.relation, f.instance));
    }
    (failed == 0 && total > 0, detail)
}

fn closed_forms() -> Result<(bool, String)> {
    let start = Instant::now();
    let c = ctx(2)?;
    let p = c.params();
    let (q, nu, mu) = (p.q.clone(), p.nu.clone(), p.mu.clone());
    let qi = q.recip();
    let d = &q - &qi;
    let one = rat(1, 1);
    let t = c.gen_t(1)?;
    let k = c.gen_k(1)?;
    let s = t
        .add_scalar(&qi)
        .add(&k.scale(&(&d / (&one - &q / &nu))))
        .scale(&(&q + &qi).recip());
    let a = t
        .add_scalar(&-q.clone())
        .add(&k.scale(&(&d / (&one + (&q * &nu).recip()))))
        .scale(&-(&q + &qi).recip());
    let pi = k.scale(&mu.recip());
    let bax = Baxter::of(&c);
    let fused = |s: &str| -> Result<Element<Rational>> {
        Ok(fusion_idempotent(&c, &bax, &UpDownTableau::parse(s)?)?.element)
    };
    let ok = fused("1;2")? == s && fused("1;1,1")? == a && fused("1;0")? == pi;
    let secs = start.elapsed().as_secs_f64();
    Ok((ok && secs < 1.0, format!("S, A, Pi exact; {secs:.3} s")))
}

fn complete_systems(stretch: bool) -> Result<(bool, String)> {
    let top = if stretch { 5 } else { 4 };
    let mut reports = Vec::new();
    let mut sizes = Vec::new();
    let start = Instant::now();
    for n in 2..=top {
        let c = ctx(n)?;
        let sys = complete_system(&c, Method::Fusion)?;
        sizes.push(sys.len());
        reports.push(system_report(&c, &sys));
    }
    let (ok, detail) = all_pass(&reports);
    let sizes_ok = sizes[..3] == [3, 7, 25];
    let sizes = sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
    Ok((ok && sizes_ok, format!("tableaux {sizes}; {detail}; {:.1} s", start.elapsed().as_secs_f64())))
}

fn oracle_equivalence() -> Result<(bool, String)> {
    let mut reports = Vec::new();
    for n in 1..=4 {
        let c = ctx(n)?;
        let f = complete_system(&c, Method::Fusion)?;
        let o = complete_system(&c, Method::JmOracle)?;
        reports.push(equivalence_report(&f, &o));
    }
    Ok(all_pass(&reports))
}

fn symmetrizers() -> Result<(bool, String)> {
    let reports = (2..=4).map(|n| symmetrizer_report(&ctx(n)?)).collect::<Result<Vec<_>>>()?;
    Ok(all_pass(&reports))
}

fn identity_suites() -> Result<(bool, String)> {
    let mut reports = Vec::new();
    for n in 2..=4 {
        let c = ctx(n)?;
        reports.push(baxter_suite(&c, 100 + n as u64, DEFAULT_SAMPLES));
        reports.push(reflection_suite(&c, 200 + n as u64, DEFAULT_SAMPLES));
    }
    Ok(all_pass(&reports))
}

fn hecke_family() -> Result<(bool, String)> {
    let mut reports = Vec::new();
    for n in 2..=4 {
        let c = ctx(n)?;
        let h = Hecke::new(n, c.params().q.clone())?;
        reports.push(family_report(&h, &sample_cs(), InverseForm::Substituted)?);
        reports.push(quotient_report(&c, &h)?);
    }
    let (ok, detail) = all_pass(&reports);
    Ok((ok, format!("{} values of c; {detail}", sample_cs().len())))
}

fn contraction() -> Result<(bool, String)> {
    let mut reports = vec![block_report(3, 7, 10, DEFAULT_ORDER)];
    for n in 1..=3 {
        reports.push(structure_report(n, &rat(5, 1), 8));
        for omega in [rat(5, 1), rat(7, 2)] {
            reports.push(idempotent_report(n, &omega, DEFAULT_ORDER));
        }
    }
    Ok(all_pass(&reports))
}

fn random(n: usize, dim: usize, rng: &mut ChaCha8Rng) -> Element<Rational> {
    (0..3).fold(Element::zero(n), |x, _| {
        let k = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        x.add(&Element::monomial(n, rng.gen_range(0..dim), k))
    })
}

fn structural() -> Result<(bool, String)> {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 1..=5 {
        let c = ctx(n)?;
        ok &= c.dim() == double_factorial_odd(n);
        ok &= Brauer::new(n, rat(5, 1))?.dim() == double_factorial_odd(n);
        ok &= Hecke::new(n, c.params().q.clone())?.dim() == (1..=n).product::<usize>();
    }
    ok &= enumerate_tableaux(4)?.len() == 25;
    let c = ctx(4)?;
    let b = Brauer::new(4, rat(7, 2))?;
    let h = Hecke::new(4, c.params().q.clone())?;
    let mut triples = 0;
    for _ in 0..100 {
        let (x, y, z) = (random(4, c.dim(), &mut rng), random(4, c.dim(), &mut rng), random(4, c.dim(), &mut rng));
        ok &= c.mul(&c.mul(&x, &y), &z) == c.mul(&x, &c.mul(&y, &z));
        let (x, y, z) = (random(4, b.dim(), &mut rng), random(4, b.dim(), &mut rng), random(4, b.dim(), &mut rng));
        ok &= b.mul(&b.mul(&x, &y), &z) == b.mul(&x, &b.mul(&y, &z));
        let (x, y, z) = (random(4, h.dim(), &mut rng), random(4, h.dim(), &mut rng), random(4, h.dim(), &mut rng));
        ok &= h.mul(&h.mul(&x, &y), &z) == h.mul(&x, &h.mul(&y, &z));
        triples += 3;
    }
    let tinv = c.word_element(&[Letter::T(1), Letter::Tinv(1)])?;
    ok &= tinv == c.one();
    Ok((ok, format!("dimensions for n <= 5; {triples} associativity triples at n = 4")))
}

fn main() -> ExitCode {
    let stretch = std::env::var_os(STRETCH_ENV).is_some();
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<(bool, String)>>)> = vec![
        ("1 BMW_2 closed forms", Box::new(closed_forms)),
        ("2 complete systems", Box::new(move || complete_systems(stretch))),
        ("3 fusion = Jucys-Murphy oracle", Box::new(oracle_equivalence)),
        ("4 (anti)symmetrizers", Box::new(symmetrizers)),
        ("5 identity suites", Box::new(identity_suites)),
        ("6 Hecke family", Box::new(hecke_family)),
        ("7 contraction", Box::new(contraction)),
        ("8 structural counts", Box::new(structural)),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let (ok, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        if !ok {
            failed += 1;
        }
        println!("{} criterion {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
