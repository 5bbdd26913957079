use proptest::prelude::*;
use qknot_core::exactalg::{series_expand, specialize_a};
use qknot_core::{BigRational, LaurentPoly, LaurentPoly2, NuValue, RatFun, RatFun2};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -4i64..=4), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn laurent2() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-3i64..=3, -4i64..=4, -3i64..=3), 0..4).prop_map(LaurentPoly2::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_stable(n in laurent(), d in nonzero_laurent(), k in nonzero_laurent()) {
        let f = RatFun::new(n.clone(), d.clone()).unwrap();
        let g = RatFun::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(RatFun::new(f.num().clone(), f.den().clone()).unwrap(), f);
    }

    #[test]
    fn invert_q_is_an_involutive_homomorphism(a in ratfun(), b in ratfun()) {
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert_eq!((&a * &b).invert_q(), &a.invert_q() * &b.invert_q());
        prop_assert_eq!((&a + &b).invert_q(), &a.invert_q() + &b.invert_q());
    }

    #[test]
    fn eval_is_a_homomorphism(a in ratfun(), b in ratfun(), q0 in 2i64..6) {
        let q0 = BigRational::from_integer(q0.into());
        if let (Ok(x), Ok(y)) = (a.eval(&q0), b.eval(&q0)) {
            prop_assert_eq!((&a * &b).eval(&q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&q0).unwrap(), &x + &y);
        }
    }

    #[test]
    fn text_round_trip(a in ratfun(), p in laurent2(), d in laurent2()) {
        prop_assert_eq!(a.to_string().parse::<RatFun>().unwrap(), a.clone());
        prop_assert_eq!(p.to_string().parse::<LaurentPoly2>().unwrap(), p.clone());
        if !d.is_zero() {
            let f = RatFun2::new(p, d).unwrap();
            prop_assert_eq!(f.to_string().parse::<RatFun2>().unwrap(), f);
        }
    }

    #[test]
    fn series_multiplication(a in ratfun(), b in ratfun()) {
        let n = 12;
        let (sa, sb) = (series_expand(&a, n), series_expand(&b, n));
        let prod = sa.mul(&sb);
        let direct = series_expand(&(&a * &b), prod.order());
        prop_assert_eq!(prod.truncate(direct.order()), direct);
        prop_assert_eq!(sa.mul(&sb), sb.mul(&sa));
    }

    #[test]
    fn specialization_is_a_homomorphism(p in laurent2(), r in laurent2(), dn in nonzero_laurent()) {
        let delta = RatFun::new(dn, LaurentPoly::q_pow(1)).unwrap();
        let (f, g) = (RatFun2::from_poly(p), RatFun2::from_poly(r));
        let (sf, sg) = (specialize_a(&f, &delta).unwrap(), specialize_a(&g, &delta).unwrap());
        prop_assert_eq!(specialize_a(&(&f * &g), &delta).unwrap(), sf.try_mul(&sg).unwrap());
        prop_assert_eq!(specialize_a(&(&f + &g), &delta).unwrap(), sf.try_add(&sg).unwrap());
    }

    #[test]
    fn nu_value_round_trip(e in ratfun(), o in ratfun(), dn in nonzero_laurent()) {
        let delta = RatFun::from_poly(dn);
        let v = NuValue::new(e, o, delta.clone()).unwrap();
        prop_assert_eq!(NuValue::parse_with_delta(&v.to_string(), &delta).unwrap(), v);
    }
}

#[test]
fn a_substitution_matches_q() {
    let f: RatFun2 = "(a^2-1)/(q^2-1)".parse().unwrap();
    assert_eq!(f.substitute_a(1).unwrap(), RatFun::one());
    assert!(f.substitute_a(0).unwrap().is_zero());
    let g: RatFun2 = "(q^2-1)/(a^2-q^2)".parse().unwrap();
    assert!(g.substitute_a(1).is_err());
}

#[test]
fn series_of_known_expansion() {
    let f: RatFun = "1/(1-q^2)".parse().unwrap();
    let s = series_expand(&f, 6);
    for e in 0..=6 {
        let want = if e % 2 == 0 { 1 } else { 0 };
        assert_eq!(s.coeff(e), BigRational::from_integer(want.into()), "q^{e}");
    }
}
