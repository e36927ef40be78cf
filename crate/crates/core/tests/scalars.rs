use bmw_fusion::scalars::{
    make_params, parse_rational, rat, rational_to_string, Poly, RatFunc, Rational, Scalar, TruncLaurent, Zero,
};
use bmw_fusion::Error;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |r| *r != rat(0, 1))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small(), 0..4).prop_map(Poly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::new('u', n, d).unwrap())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in small(), b in small(), c in nonzero()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(c.try_inv().unwrap() * &c, rat(1, 1));
        prop_assert_eq!(parse_rational(&rational_to_string(&a)).unwrap(), a);
    }

    #[test]
    fn ratfunc_arithmetic(a in ratfunc(), b in ratfunc(), x in small()) {
        let (Ok(va), Ok(vb)) = (a.evaluate_at(&x), b.evaluate_at(&x)) else { return Ok(()) };
        prop_assert_eq!((a.clone() + &b).evaluate_at(&x).unwrap(), &va + &vb);
        prop_assert_eq!((a.clone() * &b).evaluate_at(&x).unwrap(), &va * &vb);
        prop_assert_eq!((a.clone() - &a).is_zero(), true);
        let d = a.denominator();
        prop_assert!(d.leading().unwrap() > &rat(0, 1));
        prop_assert!(Poly::gcd(a.numerator(), d).is_constant());
    }

    #[test]
    fn ratfunc_division_round_trip(a in ratfunc(), b in ratfunc()) {
        if b.is_zero() {
            prop_assert_eq!(a.try_div(&b), Err(Error::DivisionByZero));
        } else {
            prop_assert_eq!(a.try_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn exp_h_inverse(r in small(), order in 1usize..10) {
        let prod = TruncLaurent::exp_h(&r, order) * &TruncLaurent::exp_h(&-r.clone(), order);
        prop_assert_eq!(prod.coeff(0), rat(1, 1));
        for k in 1..order as i64 {
            prop_assert_eq!(prod.coeff(k), rat(0, 1));
        }
        prop_assert_eq!(prod.precision(), Some(order as i64));
        let inv = TruncLaurent::exp_h(&r, order).invert().unwrap();
        prop_assert_eq!(inv, TruncLaurent::exp_h(&-r, order));
    }

    #[test]
    fn params_identities(q in nonzero(), nu in nonzero()) {
        if let Ok(p) = make_params(q.clone(), nu.clone(), 2) {
            prop_assert_eq!(&p.c * &q * &nu, rat(-1, 1));
            let qi = q.recip();
            prop_assert_eq!(&p.mu * (&q - &qi) * &nu, (&qi + &nu) * (&q - &nu));
        }
    }
}

#[test]
fn ratfunc_examples() {
    let u = RatFunc::var('u');
    let one = RatFunc::constant(rat(1, 1));
    let f = (u.clone() - &one).try_div(&(u.clone() * &u - &one)).unwrap();
    assert_eq!(f.denominator(), &Poly::from_coeffs(vec![rat(1, 1), rat(1, 1)]));
    assert_eq!(f.evaluate_at(&rat(3, 1)).unwrap(), rat(1, 4));
    let g = one.try_div(&(u.clone() - &one)).unwrap();
    assert!(matches!(g.evaluate_at(&rat(1, 1)), Err(Error::PoleAtEvaluation(_))));
    assert_eq!(u.check_compatible(&RatFunc::var('v')), Err(Error::VariableMismatch('u', 'v')));
}

#[test]
fn laurent_examples() {
    let e = TruncLaurent::exp_h(&rat(1, 1), 3);
    assert_eq!((e.coeff(0), e.coeff(1), e.coeff(2)), (rat(1, 1), rat(1, 1), rat(1, 2)));
    let d = (TruncLaurent::exp_h(&rat(2, 1), 3) - TruncLaurent::exp_h(&rat(0, 1), 3))
        .try_div(&TruncLaurent::h())
        .unwrap();
    assert_eq!((d.valuation(), d.coeff(0), d.coeff(1)), (0, rat(2, 1), rat(2, 1)));
    assert_eq!(TruncLaurent::h().invert().unwrap().constant_term(), Err(Error::NegativeValuation(-1)));
    assert_eq!(TruncLaurent::exact(0, vec![]).invert(), Err(Error::NonInvertible));
}

#[test]
fn params_example() {
    let p = make_params(rat(2, 1), rat(3, 1), 2).unwrap();
    assert_eq!((p.mu, p.c), (rat(-7, 9), rat(-1, 6)));
    assert!(matches!(make_params(rat(1, 1), rat(3, 1), 2), Err(Error::NotGeneric(_))));
}
