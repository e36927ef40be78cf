use bmw_fusion::bmw::{Context, Element};
use bmw_fusion::combinatorics::{enumerate_standard, UpDownTableau};
use bmw_fusion::hecke::{family_report, quotient_report, reduced_word, Hecke, HeckeFamily, InverseForm};
use bmw_fusion::scalars::{default_q_nu, make_params, rat, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q() -> Rational {
    default_q_nu().0
}

fn bmw(n: usize) -> Context<Rational> {
    let (q, nu) = default_q_nu();
    Context::build(n, &make_params(q, nu, n).unwrap()).unwrap()
}

fn samples() -> Vec<Rational> {
    vec![rat(0, 1), rat(1, 2), rat(-2, 3), rat(3, 7), rat(-35, 18)]
}

#[test]
fn dimensions_and_relations() {
    for (n, d) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
        assert_eq!(Hecke::new(n, q()).unwrap().dim(), d);
    }
    let h = Hecke::new(3, q()).unwrap();
    let (t1, t2) = (h.gen(1).unwrap(), h.gen(2).unwrap());
    assert_eq!(h.mul(&h.mul(&t1, &t2), &t1), h.mul(&h.mul(&t2, &t1), &t2));
    let d = q() - q().recip();
    assert_eq!(h.mul(&t1, &t1), h.one().add(&t1.scale(&d)));
    assert_eq!(reduced_word(&[2, 1, 0]), vec![1, 2, 1]);
    assert_eq!(reduced_word(&[1, 0, 2]), vec![1]);
}

fn random_hecke(h: &Hecke, rng: &mut ChaCha8Rng) -> Element<Rational> {
    let mut e = h.zero();
    for _ in 0..3 {
        let w = rng.gen_range(0..h.dim());
        e = e.add(&Element::monomial(h.n(), w, rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))));
    }
    e
}

#[test]
fn associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=5 {
        let h = Hecke::new(n, q()).unwrap();
        for _ in 0..100 {
            let (a, b, c) = (random_hecke(&h, &mut rng), random_hecke(&h, &mut rng), random_hecke(&h, &mut rng));
            assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
        }
    }
}

#[test]
fn quotient_is_multiplicative() {
    let ctx = bmw(3);
    let h = Hecke::new(3, q()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let mut a = ctx.zero();
        let mut b = ctx.zero();
        for _ in 0..3 {
            a = a.add(&Element::monomial(3, rng.gen_range(0..15), rat(rng.gen_range(-3..=3), 2)));
            b = b.add(&Element::monomial(3, rng.gen_range(0..15), rat(rng.gen_range(-3..=3), 5)));
        }
        let ab = h.quotient(&ctx, &ctx.mul(&a, &b)).unwrap();
        assert_eq!(ab, h.mul(&h.quotient(&ctx, &a).unwrap(), &h.quotient(&ctx, &b).unwrap()));
        // The ideal generated by K_1.
        let k = ctx.gen_k(1).unwrap();
        assert!(h.quotient(&ctx, &ctx.product(&[a.clone(), k, b.clone()])).unwrap().is_zero());
    }
    let u = ctx.gen_tinv(2).unwrap();
    let d = q() - q().recip();
    assert_eq!(h.quotient(&ctx, &u).unwrap(), h.gen(2).unwrap().add_scalar(&-d));
}

#[test]
fn two_box_row() {
    let h = Hecke::new(2, q()).unwrap();
    let qi = q().recip();
    let expect = h.gen(1).unwrap().add_scalar(&qi).scale(&(q() + &qi).recip());
    let u = UpDownTableau::parse("1;2").unwrap();
    for c in [rat(0, 1), rat(1, 2), rat(-2, 3)] {
        let fam = HeckeFamily { alg: &h, c, form: InverseForm::Substituted };
        assert_eq!(fam.idempotent(&u).unwrap(), expect);
    }
    // At c = 0 the Q-factors are the inverses of T_i.
    let fam = HeckeFamily { alg: &h, c: rat(0, 1), form: InverseForm::Substituted };
    let (f, _) = fam.factors(&[rat(1, 1)], &rat(5, 1)).unwrap();
    let d = q() - q().recip();
    assert_eq!(f[0], (1, -d, rat(1, 1)));
}

#[test]
fn family_systems() {
    for n in 2..=4 {
        let h = Hecke::new(n, q()).unwrap();
        let r = family_report(&h, &samples(), InverseForm::Substituted).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }
    assert_eq!(enumerate_standard(4).unwrap().len(), 10);
}

#[test]
fn family_matches_bmw_quotient() {
    for n in 2..=4 {
        let ctx = bmw(n);
        let h = Hecke::new(n, q()).unwrap();
        let r = quotient_report(&ctx, &h).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }
}

#[test]
fn literal_inverse_reading_fails() {
    // Inverting T_k(u_k, u_j) instead of T_k(u_j, u_k) does not give a
    // fusion function: already the two-box row is not idempotent.
    let h = Hecke::new(2, q()).unwrap();
    let fam = HeckeFamily { alg: &h, c: rat(1, 2), form: InverseForm::Literal };
    let e = fam.idempotent(&UpDownTableau::parse("1;2").unwrap()).unwrap();
    assert_ne!(h.mul(&e, &e), e);
    let r = family_report(&h, &samples(), InverseForm::Literal).unwrap();
    assert!(!r.passed());
}
