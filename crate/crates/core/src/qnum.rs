//! q-deformed rationals.
//!
//! `{x}` is the right q-rational, evaluated from an even continued fraction
//! with the nested formula; `{x}^♭` is the left q-rational, the q-adic limit
//! of `{y}` as `y` approaches `x` from below.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{series_expand, LaurentPoly, RatFun, TruncSeries};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Parse `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// An even-length continued fraction `a₁ + 1/(a₂ + 1/(… + 1/a_{2m}))`
/// with `a₁ ∈ ℤ` and every later term positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenCF {
    terms: Vec<BigInt>,
}

impl EvenCF {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.len() < 2 || !terms.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument("even continued fraction needs an even number (≥ 2) of terms".into()));
        }
        if terms[1..].iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidArgument("continued fraction terms after the first must be positive".into()));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// The rational number the continued fraction folds to.
    pub fn value(&self) -> Rational {
        let mut it = self.terms.iter().rev();
        let mut t = Rational::from_integer(it.next().unwrap().clone());
        for a in it {
            t = Rational::from_integer(a.clone()) + t.recip();
        }
        t
    }
}

impl fmt::Display for EvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Regular continued fraction by the Euclidean algorithm; the last term is
/// at least 2 unless the expansion has length 1.
fn regular_cf(x: &Rational) -> Vec<BigInt> {
    let mut out = Vec::new();
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    loop {
        let (a, r) = n.div_mod_floor(&d);
        out.push(a);
        if r.is_zero() {
            return out;
        }
        n = d;
        d = r;
    }
}

/// Even continued fraction of `x`. Integers become `[x−1, 1]`.
pub fn even_cf(x: &Rational) -> EvenCF {
    let mut terms = regular_cf(x);
    if terms.len() % 2 == 1 {
        let last = terms.pop().unwrap();
        debug_assert!(terms.is_empty() || last > BigInt::one());
        terms.push(last - 1);
        terms.push(BigInt::one());
    }
    let cf = EvenCF { terms };
    debug_assert_eq!(&cf.value(), x);
    cf
}

fn small(a: &BigInt) -> i64 {
    a.to_i64().expect("continued fraction term fits in i64")
}

/// The right q-rational `{x}`, evaluated from the even continued fraction
/// with the nested formula.
pub fn qrational(x: &Rational) -> RatFun {
    nested_formula(&even_cf(x))
}

/// `{a₁} + q^{2a₁}/({a₂}_{q⁻²} + q^{−2a₂}/({a₃} + …))`, evaluated from the
/// tail with a numerator/denominator pair and normalized once.
pub fn nested_formula(cf: &EvenCF) -> RatFun {
    let terms = cf.terms();
    let m = terms.len();
    let last = small(&terms[m - 1]);
    let mut num = LaurentPoly::qint(last).invert_q();
    let mut den = LaurentPoly::one();
    for i in (0..m - 1).rev() {
        let a = small(&terms[i]);
        // position i + 1 is odd for even i
        let (head, step) = if i % 2 == 0 {
            (LaurentPoly::qint(a), LaurentPoly::q_pow(2 * a))
        } else {
            (LaurentPoly::qint(a).invert_q(), LaurentPoly::q_pow(-2 * a))
        };
        let next = &(&head * &num) + &(&step * &den);
        den = num;
        num = next;
    }
    RatFun::new(num, den).expect("continuant denominators never vanish")
}

/// `{x}` through the two functional equations only: `{x+1} = q²{x}+1`
/// and `{1/x} = 1/{x}_{q⁻¹}`.
pub fn qrational_by_recursion(x: &Rational) -> RatFun {
    let n = x.floor();
    let frac = x - &n;
    let n = small(n.numer());
    let base = if frac.is_zero() {
        RatFun::zero()
    } else {
        let inner = qrational_by_recursion(&frac.recip());
        inner.invert_q().inv().expect("q-rational of a number > 1 is nonzero")
    };
    &base.shift_by(2 * n) + &RatFun::from_poly(LaurentPoly::qint(n))
}

/// A 2×2 matrix over `Z[q^±]` acting by Möbius transformations.
#[derive(Clone, Debug)]
struct Mobius([LaurentPoly; 4]);

impl Mobius {
    fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        Mobius([&(a * e) + &(b * g), &(a * f) + &(b * h), &(c * e) + &(d * g), &(c * f) + &(d * h)])
    }

    /// `t ↦ q^{2c} t + {c}`.
    fn shift(c: i64) -> Self {
        Mobius([LaurentPoly::q_pow(2 * c), LaurentPoly::qint(c), LaurentPoly::zero(), LaurentPoly::one()])
    }

    /// `t ↦ −q⁻²/t`.
    fn flip() -> Self {
        Mobius([LaurentPoly::zero(), -LaurentPoly::one(), LaurentPoly::q_pow(2), LaurentPoly::zero()])
    }

    /// Apply to `tn/td`.
    fn apply(&self, tn: &LaurentPoly, td: &LaurentPoly) -> Result<RatFun> {
        let [a, b, c, d] = &self.0;
        RatFun::new(&(a * tn) + &(b * td), &(c * tn) + &(d * td))
    }
}

/// Negative ("minus") continued fraction `x = c₁ − 1/(c₂ − 1/(…))`, all
/// `c_i` after the first at least 2.
fn minus_cf(x: &Rational) -> Vec<i64> {
    let mut out = Vec::new();
    let mut z = x.clone();
    loop {
        let c = z.ceil();
        out.push(small(c.numer()));
        let rest = &c - &z;
        if rest.is_zero() {
            return out;
        }
        z = rest.recip();
    }
}

/// The matrix sending `{0}` to `{x}` (and `{0}^♭` to `{x}^♭`).
fn matrix_for(x: &Rational) -> Mobius {
    let cs = minus_cf(x);
    let mut m = Mobius::shift(cs[0]);
    for &c in &cs[1..] {
        m = m.mul(&Mobius::flip()).mul(&Mobius::shift(c));
    }
    m
}

/// `{x}` from the matrix action of the shift and `{−1/x} = −q⁻²/{x}` on `{0} = 0`.
pub fn qrational_by_matrix(x: &Rational) -> RatFun {
    matrix_for(x)
        .apply(&LaurentPoly::zero(), &LaurentPoly::one())
        .expect("matrix entries give a nonzero denominator")
}

/// `δ_x = {x} − {x−1}`.
pub fn qdelta(x: &Rational) -> RatFun {
    &qrational(x) - &qrational(&(x - int(1)))
}

/// `{x}{x−1}⋯{x−k+1} / ({k}{k−1}⋯{1})`.
pub fn qbinomial(x: &Rational, k: u32) -> RatFun {
    let mut num = RatFun::one();
    let mut den = LaurentPoly::one();
    for i in 0..k as i64 {
        num = &num * &qrational(&(x - int(i)));
        den = &den * &LaurentPoly::qint(i + 1);
    }
    num.checked_div(&RatFun::from_poly(den)).expect("q-factorials are nonzero")
}

/// The seed `{1}^♭`, reproduced in tests by the q-adic limit of `{1 − 1/k}`.
pub fn left_one() -> RatFun {
    RatFun::q_pow(2)
}

/// The left q-rational `{x}^♭`, obtained from the seed by the same shift and
/// `{−1/x} = −q⁻²/{x}` relations that generate `{x}`.
pub fn left_qrational(x: &Rational) -> RatFun {
    // {0}^♭ = q⁻²({1}^♭ − 1)
    let zero = (&left_one() - &RatFun::one()).shift_by(-2);
    matrix_for(x).apply(zero.num(), zero.den()).expect("left q-rationals have no poles")
}

/// `δ_x^♭ = {x}^♭ − {x−1}^♭`.
pub fn left_qdelta(x: &Rational) -> RatFun {
    &left_qrational(x) - &left_qrational(&(x - int(1)))
}

/// Minimum number of consecutive identical truncations that counts as stabilized.
pub const LIMIT_WINDOW: usize = 3;

/// Coefficient-wise limit at `q = 0` of a sequence of rational functions,
/// up to and including `q^order`.
///
/// After `j` terms the limit is declared once the last `max(LIMIT_WINDOW, ⌈j/2⌉)`
/// terms all expand to the same truncated series. A fixed window is not
/// enough: `{5/2 − 1/k}` repeats a wrong truncation at order 20 for four
/// consecutive `k`. At most `10·order` terms are examined.
pub fn q_adic_limit<I>(seq: I, order: i64) -> Result<TruncSeries>
where
    I: IntoIterator<Item = RatFun>,
{
    let budget = (10 * order.max(1)) as usize;
    let mut last: Option<TruncSeries> = None;
    let mut run = 0usize;
    for (j, f) in seq.into_iter().take(budget).enumerate() {
        let s = series_expand(&f, order);
        if last.as_ref() == Some(&s) {
            run += 1;
        } else {
            run = 1;
        }
        if run >= LIMIT_WINDOW.max((j + 2) / 2) {
            return Ok(s);
        }
        last = Some(s);
    }
    Err(Error::NotConvergent(order))
}

/// The sequence `{x − 1/k}` for `k = 1, 2, …`.
pub fn left_approach(x: &Rational) -> impl Iterator<Item = RatFun> + '_ {
    (1i64..).map(move |k| qrational(&(x - Rational::new(1.into(), k.into()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    fn cf(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| a.into()).collect()
    }

    #[test]
    fn even_cf_examples() {
        assert_eq!(even_cf(&r("5/2")).terms(), cf(&[2, 2]));
        assert_eq!(even_cf(&r("1")).terms(), cf(&[0, 1]));
        assert_eq!(even_cf(&r("2/3")).terms(), cf(&[0, 1, 1, 1]));
        assert_eq!(even_cf(&r("-7/3")).value(), r("-7/3"));
        assert_eq!(even_cf(&r("0")).terms(), cf(&[-1, 1]));
    }

    #[test]
    fn qrational_examples() {
        assert_eq!(qrational(&r("2")), rf("1+q^2"));
        assert_eq!(qrational(&r("1/2")), rf("(q^2)/(1+q^2)"));
        assert_eq!(qrational(&r("5/2")), rf("(1+2*q^2+q^4+q^6)/(1+q^2)"));
        assert_eq!(qrational(&r("-1")), rf("-q^-2"));
        assert_eq!(qrational(&r("-2")), rf("-q^-4-q^-2"));
        assert_eq!(qrational(&r("0")), RatFun::zero());
        assert_eq!(qrational(&r("2/3")), rf("(q^2+q^4)/(1+q^2+q^4)"));
    }

    #[test]
    fn three_routes_agree() {
        for s in ["7/5", "-13/8", "21/34", "100/7", "-1/9", "3", "-4"] {
            let x = r(s);
            let f = qrational(&x);
            assert_eq!(f, qrational_by_recursion(&x), "{s}");
            assert_eq!(f, qrational_by_matrix(&x), "{s}");
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(qdelta(&r("3")), RatFun::q_pow(4));
        assert_eq!(qdelta(&r("1/2")), rf("(1+q^4)/(q^2+q^4)"));
        assert_eq!(qdelta(&r("2/3")), rf("(1+q^4+q^6)/(q^2+q^4+q^6)"));
        assert_eq!(qdelta(&r("0")), RatFun::q_pow(-2));
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(&r("5"), 0), RatFun::one());
        assert_eq!(qbinomial(&r("4"), 2), rf("1+q^2+2*q^4+q^6+q^8"));
        assert_eq!(qbinomial(&r("2"), 3), RatFun::zero());
    }

    #[test]
    fn left_examples() {
        assert_eq!(left_qrational(&r("1")), RatFun::q_pow(2));
        assert_eq!(left_qrational(&r("2")), rf("1+q^4"));
        assert_eq!(left_qdelta(&r("2")), rf("1-q^2+q^4"));
        assert_eq!(left_qrational(&r("1/2")), rf("(q^4)/(1+q^4)"));
        assert_eq!(left_qrational(&r("2/3")), rf("(q^2+q^6)/(1+q^2+q^6)"));
        for n in -4..6 {
            let expect = &RatFun::from_poly(LaurentPoly::qint(n - 1)) + &RatFun::q_pow(2 * n);
            assert_eq!(left_qrational(&int(n)), expect, "n = {n}");
        }
    }

    #[test]
    fn limit_of_constant_sequence() {
        let f = rf("(1+q^2)/(1-q^2+q^6)");
        let lim = q_adic_limit(std::iter::repeat(f.clone()), 12).unwrap();
        assert_eq!(lim, series_expand(&f, 12));
    }

    #[test]
    fn limit_failure_is_reported() {
        let seq = (0i64..).map(|k| RatFun::q_pow(k % 2));
        assert_eq!(q_adic_limit(seq, 4), Err(Error::NotConvergent(4)));
    }

    #[test]
    fn left_one_from_limit() {
        let lim = q_adic_limit(left_approach(&int(1)), 10).unwrap();
        assert_eq!(lim, series_expand(&left_one(), 10));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(r(" -6/4 "), Rational::new((-3).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
