use proptest::prelude::*;
use qknot_core::braid::parse_braid;
use qknot_core::homfly::{homfly, homfly_twist_coeff, mu_colored};
use qknot_core::qnum::{parse_rational, qrational};
use qknot_core::xinv::{
    colored_unknot_u, colored_unknot_u_recursive, digon_closed_form, digon_specialize, flat_invariant,
    normalized_invariant, specialize_homfly, twist_coeff_x, x_invariant, XContext,
};
use qknot_core::{BraidWord, NuValue, RatFun, Rational};

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn w(s: &str) -> BraidWord {
    parse_braid(s, None).unwrap()
}

fn word() -> impl Strategy<Value = BraidWord> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec((1..n as i32, any::<bool>()), 0..6)
            .prop_map(move |v| BraidWord::new(v.into_iter().map(|(g, s)| if s { g } else { -g }).collect(), n).unwrap())
    })
}

fn small_x() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec!["2", "3", "1/2", "2/3", "5/2", "-3/2", "7/5"]).prop_map(r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nu_parity(w in word(), x in small_x()) {
        let v = x_invariant(&w, &XContext::right(x)).unwrap();
        let s = w.closure_stats();
        let want = (s.writhe + s.components as i64).rem_euclid(2) as u8;
        prop_assert!(v.value.is_zero() || v.value.nu_parity() == Some(want));
    }

    #[test]
    fn normalized_markov_invariance(w in word(), x in small_x(), sign in prop::bool::ANY) {
        let ctx = XContext::right(x);
        let n = w.strands();
        let g = if sign { n as i32 } else { -(n as i32) };
        let mut letters = w.letters().to_vec();
        letters.push(g);
        let stab = BraidWord::new(letters, n + 1).unwrap();
        prop_assert_eq!(normalized_invariant(&stab, &ctx).unwrap(), normalized_invariant(&w, &ctx).unwrap());
        let conj = BraidWord::new([&[1], w.letters(), &[-1]].concat(), n).unwrap();
        prop_assert_eq!(normalized_invariant(&conj, &ctx).unwrap(), normalized_invariant(&w, &ctx).unwrap());
    }

    #[test]
    fn integer_points_are_gl_n(w in word(), n in 1i64..=4) {
        // δ_n = q^{2n−2}, so ν = q^{1−n} and a = q^n
        let v = x_invariant(&w, &XContext::right(Rational::from_integer(n.into()))).unwrap().value;
        let collapsed = v.even() + &v.odd().shift_by(1 - n);
        prop_assert_eq!(collapsed, homfly(&w).substitute_a(n).unwrap());
    }
}

#[test]
fn trefoil_closed_form() {
    for x in ["2", "1/2", "2/3", "5/2", "-1/3"] {
        let ctx = XContext::right(r(x));
        let nu2 = NuValue::nu_pow(2, ctx.delta()).unwrap();
        let inner = &RatFun::q_pow(4) + &(&RatFun::one() - &RatFun::q_pow(2)) * &ctx.qnum(1);
        let want = nu2.scale(&(&ctx.qnum(0) * &inner));
        assert_eq!(x_invariant(&w("1 1 1"), &ctx).unwrap().value, want, "x = {x}");
    }
}

#[test]
fn digon_coefficients() {
    for x in ["2", "1/2", "2/3"] {
        let ctx = XContext::right(r(x));
        for k in -5..=5 {
            assert_eq!(digon_specialize(k, &ctx).unwrap(), digon_closed_form(k, &ctx), "x = {x}, r = {k}");
        }
    }
}

#[test]
fn colored_unknots() {
    for x in ["2", "5/2"] {
        let ctx = XContext::right(r(x));
        for k in 1..=6 {
            let closed = colored_unknot_u(&ctx, k).unwrap();
            assert_eq!(colored_unknot_u_recursive(&ctx, k).unwrap(), closed, "x = {x}, k = {k}");
            assert_eq!(specialize_homfly(&mu_colored(k), &ctx).unwrap(), closed, "x = {x}, k = {k}");
        }
    }
}

#[test]
fn twist_coefficients() {
    let ctx = XContext::right(r("2/3"));
    for k in 1..=4 {
        for sign in [1, -1] {
            let v = specialize_homfly(&homfly_twist_coeff(k, sign), &ctx).unwrap();
            assert_eq!(v, twist_coeff_x(&ctx, k, sign).unwrap(), "k = {k}, sign = {sign}");
        }
    }
}

#[test]
fn chirality() {
    let (t, m) = (w("1 1 1"), w("-1 -1 -1"));
    let ctx = XContext::right(r("2/3"));
    assert_ne!(normalized_invariant(&t, &ctx).unwrap(), normalized_invariant(&m, &ctx).unwrap());
    let f = flat_invariant(&t, &r("2")).unwrap();
    let g = flat_invariant(&m, &r("2")).unwrap();
    assert_ne!(f.value, g.value);
    // the figure-eight stays amphichiral
    let e = w("1 -2 1 -2");
    assert_eq!(normalized_invariant(&e, &ctx).unwrap(), normalized_invariant(&e.mirror(), &ctx).unwrap());
}

#[test]
fn unknot_values() {
    for x in ["3", "3/7", "-2/5"] {
        let ctx = XContext::right(r(x));
        let n = normalized_invariant(&parse_braid("", Some(1)).unwrap(), &ctx).unwrap();
        assert_eq!(n, qrational(&r(x)));
        assert_eq!(normalized_invariant(&w("1 2"), &ctx).unwrap(), n);
    }
}
