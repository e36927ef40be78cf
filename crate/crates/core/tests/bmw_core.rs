use std::sync::OnceLock;

use bmw_fusion::bmw::{cache, element_from_json, element_to_json, verify_relations, Context, Element, Letter};
use bmw_fusion::scalars::{default_q_nu, make_params, rat, ParamSet, Rational};
use bmw_fusion::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(n: usize) -> ParamSet {
    let (q, nu) = default_q_nu();
    make_params(q, nu, n).unwrap()
}

fn ctx(n: usize) -> &'static Context<Rational> {
    static CTX: [OnceLock<Context<Rational>>; 6] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CTX[n].get_or_init(|| Context::build(n, &params(n)).unwrap())
}

fn w(ctx: &Context<Rational>, s: &[&str]) -> Element<Rational> {
    let letters: Vec<Letter> = s.iter().map(|x| Letter::parse(x).unwrap()).collect();
    ctx.word_element(&letters).unwrap()
}

fn sc(ctx: &Context<Rational>, r: Rational) -> Element<Rational> {
    ctx.scalar(r)
}

#[test]
fn canonical_word_counts() {
    assert_eq!(ctx(2).dim(), 3);
    let names: Vec<String> = (0..3).map(|i| ctx(2).format_word(i)).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(sorted, vec!["1", "K1", "T1"]);
    assert_eq!(ctx(3).dim(), 15);
    assert_eq!(ctx(4).dim(), 105);
}

#[test]
fn rejects_q_one() {
    assert!(matches!(make_params(rat(1, 1), rat(3, 1), 3), Err(Error::NotGeneric(_))));
    let p = params(2);
    assert!(matches!(Context::build(3, &p), Err(Error::NotGeneric(_))));
}

#[test]
fn generator_identities() {
    let c = ctx(3);
    let p = c.params();
    let d = &p.q - p.q.recip();
    let one = c.one::<Rational>();
    assert_eq!(c.mul(&w(c, &["T1"]), &w(c, &["U1"])), one);
    assert_eq!(c.mul(&w(c, &["U2"]), &w(c, &["T2"])), one);
    assert_eq!(w(c, &["K1", "K1"]), w(c, &["K1"]).scale(&p.mu));
    assert_eq!(w(c, &["K1", "T2", "T1"]), w(c, &["K1", "K2"]));
    assert_eq!(w(c, &["K1", "T1"]), w(c, &["K1"]).scale(&p.nu));
    assert_eq!(w(c, &["K2", "U1", "K2"]), w(c, &["K2"]).scale(&p.nu));
    // T^2 = 1 + d T - d nu K, derived from the definition of K.
    let rhs = one
        .add(&w(c, &["T1"]).scale(&d))
        .sub(&w(c, &["K1"]).scale(&(&d * &p.nu)));
    assert_eq!(w(c, &["T1", "T1"]), rhs);
    // K = 1 - (T - T^-1)/d.
    let k = one.sub(&w(c, &["T2"]).sub(&w(c, &["U2"])).scale(&d.recip()));
    assert_eq!(k, c.gen_k(2).unwrap());
    assert!(c.gen_t(3).is_err());
    assert!(c.gen_k(0).is_err());
}

#[test]
fn anti_automorphism_and_jm() {
    let c = ctx(3);
    let p = c.params();
    assert_eq!(c.rho(&w(c, &["T1", "T2"])), w(c, &["T2", "T1"]));
    assert_eq!(c.rho(&w(c, &["K1"])), w(c, &["K1"]));
    let y2 = c.jm(2).unwrap();
    let y3 = c.jm(3).unwrap();
    assert_eq!(c.rho(&y3), y3);
    assert_eq!(y2, w(c, &["T1", "T1"]));
    assert_eq!(c.mul(&y2, &y3), c.mul(&y3, &y2));
    assert_eq!(c.jm(1).unwrap(), c.one());
    let nu2 = &p.nu * &p.nu;
    assert_eq!(
        c.product(&[w(c, &["K1"]), y2.clone(), c.jm(1).unwrap()]),
        w(c, &["K1"]).scale(&nu2)
    );
    assert_eq!(c.mul_jm(&w(c, &["K2"]), 3), c.mul(&w(c, &["K2"]), &y3));
    assert!(c.jm(4).is_err());
}

#[test]
fn relation_suites() {
    for n in 2..=4 {
        let r = verify_relations(ctx(n)).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.total() > 0);
    }
    let r = verify_relations(ctx(4)).unwrap();
    assert!(r.checks.iter().any(|c| c.relation == "T_i T_j = T_j T_i" && c.instance == "i=1, j=3"));
    assert!(r.checks.iter().any(|c| c.relation.starts_with("rho image")));
}

fn random_element(c: &Context<Rational>, rng: &mut ChaCha8Rng, terms: usize) -> Element<Rational> {
    let mut e = c.zero();
    for _ in 0..terms {
        let idx = rng.gen_range(0..c.dim());
        let coeff = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        e = e.add(&Element::monomial(c.n(), idx, coeff));
    }
    e
}

#[test]
fn associativity_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4 {
        let c = ctx(n);
        let count = if n == 4 { 100 } else { 40 };
        for _ in 0..count {
            let a = random_element(c, &mut rng, 3);
            let b = random_element(c, &mut rng, 3);
            let d = random_element(c, &mut rng, 3);
            assert_eq!(c.mul(&c.mul(&a, &b), &d), c.mul(&a, &c.mul(&b, &d)));
            assert_eq!(c.mul(&c.one(), &a), a);
            assert_eq!(c.mul(&a, &c.one()), a);
            assert_eq!(c.rho(&c.mul(&a, &b)), c.mul(&c.rho(&b), &c.rho(&a)));
        }
    }
}

#[test]
fn bmw2_projectors_from_generator_polynomials() {
    // S, A and the kappa projector as polynomials in T (one-variable
    // spectral decomposition): they are orthogonal idempotents summing to 1.
    let c = ctx(2);
    let p = c.params();
    let (q, nu) = (p.q.clone(), p.nu.clone());
    let qi = q.recip();
    let t = w(c, &["T1"]);
    let lin = |a: &Rational| t.add_scalar(&-a.clone());
    let s = c.mul(&lin(&-qi.clone()), &lin(&nu)).scale(&((&q + &qi) * (&q - &nu)).recip());
    let a = c.mul(&lin(&q), &lin(&nu)).scale(&((-&qi - &q) * (-&qi - &nu)).recip());
    let pi = c.mul(&lin(&q), &lin(&-qi.clone())).scale(&((&nu - &q) * (&nu + &qi)).recip());
    assert_eq!(pi, w(c, &["K1"]).scale(&p.mu.recip()));
    for e in [&s, &a, &pi] {
        assert_eq!(c.mul(e, e), *e);
    }
    assert_eq!(c.mul(&s, &a), c.zero());
    assert_eq!(c.mul(&s, &pi), c.zero());
    assert_eq!(s.add(&a).add(&pi), c.one());
    // T = q S - q^-1 A + nu Pi.
    assert_eq!(s.scale(&q).sub(&a.scale(&qi)).add(&pi.scale(&nu)), t);
}

#[test]
fn json_round_trip() {
    let c = ctx(3);
    let e = w(c, &["T1", "K2"]).scale(&rat(-3, 7)).add(&sc(c, rat(1, 2)));
    let v = element_to_json(c, &e);
    assert_eq!(v["algebra"], "bmw");
    assert_eq!(v["params"]["q"], "6/5");
    assert_eq!(element_from_json(c, &v).unwrap(), e);
    let text = r#"{"algebra":"bmw","n":3,"params":{"q":"6/5","nu":"7/3"},"terms":[{"word":["U1"],"coeff":"1"}]}"#;
    let parsed = element_from_json(c, &serde_json::from_str(text).unwrap()).unwrap();
    assert_eq!(parsed, c.gen_tinv(1).unwrap());
}

#[test]
fn cache_cold_and_warm_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = params(3);
    let (cold, s1) = cache::load_or_build(3, &p, Some(dir.path())).unwrap();
    let (warm, s2) = cache::load_or_build(3, &p, Some(dir.path())).unwrap();
    assert_eq!(s1, cache::CacheStatus::Miss);
    assert_eq!(s2, cache::CacheStatus::Hit);
    assert_eq!(cold.words(), warm.words());
    let y_cold = cold.jm(3).unwrap();
    assert_eq!(y_cold, warm.jm(3).unwrap());
    assert_eq!(cache::list(dir.path()).unwrap().len(), 1);
    // A corrupted file is recomputed.
    let file = cache::cache_file(dir.path(), 3, &p);
    std::fs::write(&file, "{not json").unwrap();
    let (_, s3) = cache::load_or_build(3, &p, Some(dir.path())).unwrap();
    assert_eq!(s3, cache::CacheStatus::Miss);
    assert_eq!(cache::clear(dir.path()).unwrap(), 1);
}

#[test]
fn laurent_structure_constants_contract_to_brauer() {
    use bmw_fusion::contraction::{Contraction, Regime};
    for n in 2..=3 {
        let con = Contraction::new(Regime::One, n, &rat(5, 1), 6).unwrap();
        assert_eq!(con.context().dim(), con.brauer().dim());
        assert!(con.structure_constant_failures().unwrap().is_empty());
        assert!(con.images_span());
    }
}
