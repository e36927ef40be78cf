use bmw_fusion::brauer::{Brauer, Diagram};
use bmw_fusion::combinatorics::{enumerate_tableaux, UpDownTableau};
use bmw_fusion::contraction::{
    block_limit, block_report, brauer_idempotent, brauer_system, contraction_block_check, idempotent_report,
    BlockKind, Contraction, Regime, DEFAULT_ORDER,
};
use bmw_fusion::fusion::SpectralSampler;
use bmw_fusion::scalars::{rat, Rational};
use bmw_fusion::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn omega() -> Rational {
    rat(5, 1)
}

#[test]
fn generators_and_counts() {
    let b = Brauer::new(3, omega()).unwrap();
    let e1 = b.eps(1).unwrap();
    let e2 = b.eps(2).unwrap();
    assert_eq!(b.mul(&e1, &e1), e1.scale(&omega()));
    assert_eq!(b.mul(&b.mul(&e1, &e2), &e1), e1);
    assert!(b.generator_relations_hold());
    let s1 = b.s(1).unwrap();
    let s2 = b.s(2).unwrap();
    assert_eq!(
        b.mul(&b.mul(&s1, &s2), &s1),
        b.mul(&b.mul(&s2, &s1), &s2)
    );
    // s_1 e_2 e_1 = s_2 e_1
    assert_eq!(b.mul(&b.mul(&s1, &e2), &e1), b.mul(&s2, &e1));
    for (n, d) in [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945)] {
        assert_eq!(Brauer::new(n, omega()).unwrap().dim(), d);
    }
    assert!(b.s(3).is_err());
}

#[test]
fn loops_are_counted() {
    let b = Brauer::new(4, rat(7, 2)).unwrap();
    let e1 = Diagram::eps(4, 1);
    let e3 = Diagram::eps(4, 3);
    let (d, loops) = e1.compose(&e1);
    assert_eq!((d, loops), (e1.clone(), 1));
    let (d13, loops) = e1.compose(&e3);
    assert_eq!(loops, 0);
    let (d, loops) = d13.compose(&d13);
    assert_eq!((d, loops), (d13, 2));
    assert_eq!(Diagram::identity(4).compose(&e3), (e3, 0));
    assert_eq!(b.index_of(&Diagram::identity(4)), 0);
}

#[test]
fn diagram_json() {
    let b = Brauer::new(2, omega()).unwrap();
    let x = b.eps(1).unwrap().add(&b.s(1).unwrap().scale(&rat(-1, 3)));
    let j = b.to_json(&x);
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.contains(r#"[["1","2"],["1'","2'"]]"#), "{text}");
    assert!(text.contains(r#"[["1","2'"],["2","1'"]]"#), "{text}");
    assert!(text.contains(r#""coeff":"-1/3""#), "{text}");
    assert!(Diagram::from_partner(vec![1, 0, 3]).is_err());
    assert!(Diagram::from_partner(vec![1, 0, 2, 2]).is_err());
}

fn random_element(b: &Brauer, rng: &mut ChaCha8Rng) -> bmw_fusion::brauer::BrauerElement {
    let mut x = b.zero();
    for _ in 0..rng.gen_range(1..=4) {
        let d = rng.gen_range(0..b.dim());
        let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        x = x.add(&b.diagram(&b.diagrams()[d].clone()).scale(&c));
    }
    x
}

#[test]
fn associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=5 {
        let b = Brauer::new(n, rat(7, 2)).unwrap();
        for _ in 0..100 {
            let (x, y, z) = (random_element(&b, &mut rng), random_element(&b, &mut rng), random_element(&b, &mut rng));
            assert_eq!(b.mul(&b.mul(&x, &y), &z), b.mul(&x, &b.mul(&y, &z)));
        }
    }
}

#[test]
fn block_examples() {
    let b = Brauer::new(3, omega()).unwrap();
    let (t1, t2) = (rat(1, 1), rat(2, 1));
    assert_eq!(
        block_limit(Regime::One, BlockKind::Q, &t1, &t2, &omega(), DEFAULT_ORDER).unwrap(),
        (rat(0, 1), rat(-1, 3))
    );
    assert_eq!(
        block_limit(Regime::One, BlockKind::T, &t1, &t2, &omega(), DEFAULT_ORDER).unwrap(),
        (rat(1, 1), rat(0, 1))
    );
    let t2 = rat(3, 1);
    // kappa = 3/2: s + 1/2 + e/(-2 - 3/2)
    assert_eq!(
        block_limit(Regime::Two, BlockKind::T, &t1, &t2, &omega(), DEFAULT_ORDER).unwrap(),
        (rat(1, 2), rat(-2, 7))
    );
    for i in 1..3 {
        for r in [Regime::One, Regime::Two] {
            for k in [BlockKind::Q, BlockKind::T] {
                assert!(contraction_block_check(&b, r, k, i, &t1, &t2, DEFAULT_ORDER).unwrap());
            }
        }
    }
    assert!(block_limit(Regime::Three, BlockKind::T, &t1, &t2, &omega(), DEFAULT_ORDER).is_err());
}

#[test]
fn block_limits_random() {
    let report = block_report(3, 11, 12, DEFAULT_ORDER);
    assert!(report.passed(), "{:?}", report.first_failure());
    assert_eq!(report.total(), 12 * 2 * 2 * 2);
}

#[test]
fn equal_thetas_have_no_limit() {
    // u1 = u2 to every order, so no truncation can certify the value.
    let t = rat(1, 1);
    let err = block_limit(Regime::One, BlockKind::T, &t, &t, &omega(), DEFAULT_ORDER).unwrap_err();
    assert!(matches!(err, Error::PrecisionExhausted(_)), "{err:?}");
}

#[test]
fn structure_constants_contract() {
    for n in 1..=3 {
        for regime in Regime::ALL {
            for omega in [rat(5, 1), rat(7, 2)] {
                let con = Contraction::new(regime, n, &omega, 8).unwrap();
                assert!(con.structure_constant_failures().unwrap().is_empty(), "n={n} regime {regime}");
                assert!(con.images_span());
            }
        }
    }
}

#[test]
fn regime_three_needs_the_sign() {
    // K T = nu^{-1} K tends to -eps, so T cannot tend to +s.
    let con = Contraction::new(Regime::Three, 2, &omega(), 8).unwrap();
    let b = con.brauer();
    let k = con.context().gen_k(1).unwrap();
    let t = con.context().gen_t(1).unwrap();
    let kt = con.context().mul(&k, &t);
    let got = con.to_brauer(&kt).unwrap();
    assert_eq!(got, b.eps(1).unwrap().scale(&rat(-1, 1)));
}

#[test]
fn two_box_examples() {
    let u = UpDownTableau::parse("1;0").unwrap();
    let e = brauer_idempotent(&u, Regime::One, &omega(), DEFAULT_ORDER).unwrap();
    let b = Brauer::new(2, omega()).unwrap();
    assert_eq!(e, b.eps(1).unwrap().scale(&rat(1, 5)));

    let row = UpDownTableau::parse("1;2").unwrap();
    let col = UpDownTableau::parse("1;1,1").unwrap();
    let s = brauer_idempotent(&row, Regime::One, &omega(), DEFAULT_ORDER).unwrap();
    // (1 + s)/2 - eps/omega
    let expect = b
        .one()
        .add(&b.s(1).unwrap())
        .scale(&rat(1, 2))
        .sub(&b.eps(1).unwrap().scale(&rat(1, 5)));
    assert_eq!(s, expect);
    assert_eq!(b.mul(&s, &s), s);
    let a = brauer_idempotent(&col, Regime::One, &omega(), DEFAULT_ORDER).unwrap();
    assert_eq!(a, b.one().sub(&b.s(1).unwrap()).scale(&rat(1, 2)));
    assert_eq!(brauer_idempotent(&row, Regime::Two, &omega(), DEFAULT_ORDER).unwrap(), a);
    assert_eq!(brauer_idempotent(&col, Regime::Two, &omega(), DEFAULT_ORDER).unwrap(), s);
}

#[test]
fn contracted_systems() {
    for n in 1..=3 {
        for omega in [rat(5, 1), rat(7, 2)] {
            let report = idempotent_report(n, &omega, DEFAULT_ORDER);
            assert!(report.passed(), "n={n}: {:?}", report.first_failure());
        }
    }
    let sys = brauer_system(Regime::One, 3, &omega(), DEFAULT_ORDER).unwrap();
    assert_eq!(sys.len(), enumerate_tableaux(3).unwrap().len());
}

#[test]
fn random_omegas() {
    let mut s = SpectralSampler::new(3);
    for _ in 0..3 {
        let omega = s.draw();
        let report = idempotent_report(2, &omega, DEFAULT_ORDER);
        assert!(report.passed(), "omega={omega}: {:?}", report.first_failure());
    }
}
