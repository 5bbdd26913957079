use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::intpoly::IntPoly;
use super::laurent::{is_negative_lead, LaurentPoly, LaurentPoly2};
use super::text::{Parser, Term};
use crate::error::{Error, Result};

/// A canonical fraction of Laurent polynomials in `q`.
///
/// The denominator is an honest polynomial with nonzero constant term and
/// positive leading coefficient, and numerator and denominator are coprime
/// in `Z[q]`. Canonical forms make structural equality value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    /// Canonical form of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (sn, n) = num.to_intpoly();
        let (sd, d) = den.to_intpoly();
        let (mut n, mut d) = if d.is_one() {
            (n, d)
        } else {
            let g = n.gcd(&d);
            if g.is_one() {
                (n, d)
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        if d.lc().unwrap().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Ok(Self {
            num: LaurentPoly::from_intpoly(sn - sd, n),
            den: LaurentPoly::from_intpoly(0, d),
        })
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        // powers of coprime pairs stay coprime
        Ok(Self { num: base.num.pow(k), den: base.den.pow(k) }.renormalize_sign())
    }

    fn renormalize_sign(self) -> Self {
        if is_negative_lead(&self.den) {
            Self { num: -&self.num, den: -&self.den }
        } else {
            self
        }
    }

    /// Multiply by `q^k` without any gcd work.
    pub fn shift_by(&self, k: i64) -> Self {
        Self { num: self.num.shift_by(k), den: self.den.clone() }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    /// Substitute `q ↦ q^{-1}` and renormalize.
    pub fn invert_q(&self) -> Self {
        Self::new(self.num.invert_q(), self.den.invert_q()).expect("nonzero denominator")
    }

    /// Exact value at a rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes at q = {q0}", self.den)));
        }
        Ok(self.num.eval(q0)? / d)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            return RatFun::new(&(&self.num * &o.den) + &o.num, o.den.clone()).unwrap();
        }
        if o.den.is_one() {
            return RatFun::new(&self.num + &(&o.num * &self.den), self.den.clone()).unwrap();
        }
        let (_, b) = self.den.to_intpoly();
        let (_, d) = o.den.to_intpoly();
        let g = b.gcd(&d);
        let b1 = LaurentPoly::from_intpoly(0, b.div_exact(&g).unwrap());
        let d1 = LaurentPoly::from_intpoly(0, d.div_exact(&g).unwrap());
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        RatFun::new(num, &self.den * &d1).unwrap()
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun::from_poly(&self.num * &o.num);
        }
        RatFun::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

forward_owned_binops!(RatFun; Add add, Sub sub, Mul mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

fn terms_to_q(terms: Vec<Term>) -> Result<LaurentPoly> {
    Ok(LaurentPoly::from_terms(
        terms.into_iter().map(|(c, vars)| (vars.get(&'q').copied().unwrap_or(0), c)),
    ))
}

fn terms_to_aq(terms: Vec<Term>) -> Result<LaurentPoly2> {
    Ok(LaurentPoly2::from_terms(terms.into_iter().map(|(c, vars)| {
        (vars.get(&'a').copied().unwrap_or(0), vars.get(&'q').copied().unwrap_or(0), c)
    })))
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s, &['q']);
        let t = p.poly()?;
        p.finish()?;
        terms_to_q(t)
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s, &['a', 'q']);
        let t = p.poly()?;
        p.finish()?;
        terms_to_aq(t)
    }
}

pub(crate) fn parse_ratfun(p: &mut Parser<'_>) -> Result<RatFun> {
    let (n, d) = p.fraction()?;
    let num = terms_to_q(n)?;
    let den = match d {
        Some(d) => terms_to_q(d)?,
        None => LaurentPoly::one(),
    };
    RatFun::new(num, den)
}

impl FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s, &['q']);
        let r = parse_ratfun(&mut p)?;
        p.finish()?;
        Ok(r)
    }
}

/// Polynomial in `a` with coefficients in `Z[q]`, dense in both variables.
type AqPoly = Vec<IntPoly>;

fn aq_trim(mut p: AqPoly) -> AqPoly {
    while p.last().is_some_and(IntPoly::is_zero) {
        p.pop();
    }
    p
}

fn aq_content(p: &AqPoly) -> IntPoly {
    let mut g = IntPoly::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn aq_div_coeff(p: &AqPoly, c: &IntPoly) -> AqPoly {
    p.iter().map(|x| x.div_exact(c).expect("content divides")).collect()
}

fn aq_pseudo_rem(a: &AqPoly, b: &AqPoly) -> AqPoly {
    let db = b.len() - 1;
    let lc = b.last().unwrap();
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let top = r.last().unwrap().clone();
        let k = r.len() - 1 - db;
        let mut next: AqPoly = r.iter().map(|x| x.mul(lc)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + k] = next[j + k].sub(&bc.mul(&top));
        }
        r = aq_trim(next);
    }
    r
}

fn aq_div_exact(a: &AqPoly, b: &AqPoly) -> Option<AqPoly> {
    let db = b.len() - 1;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lc = b.last().unwrap();
    let mut r = a.clone();
    let mut quot = vec![IntPoly::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let qk = top.div_exact(lc)?;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&bc.mul(&qk));
        }
        quot[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(aq_trim(quot))
}

/// Gcd in `Z[q][a]` via a primitive pseudo-remainder sequence over `Z[q]`.
fn aq_gcd(a: &AqPoly, b: &AqPoly) -> AqPoly {
    let ca = aq_content(a);
    let cb = aq_content(b);
    let c = ca.gcd(&cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let mut x = aq_div_coeff(a, &ca);
    let mut y = aq_div_coeff(b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        let r = aq_pseudo_rem(&x, &y);
        if r.is_empty() {
            break y;
        }
        if r.len() == 1 {
            break vec![IntPoly::one()];
        }
        let cr = aq_content(&r);
        x = y;
        y = aq_div_coeff(&r, &cr);
    };
    g.iter().map(|x| x.mul(&c)).collect()
}

/// `(a-shift, q-shift, dense body)` with both minimal exponents zero.
fn to_aq(p: &LaurentPoly2) -> (i64, i64, AqPoly) {
    let qmin = p.min_q().unwrap();
    let body = p
        .a_coeffs()
        .iter()
        .map(|c| {
            if c.is_zero() {
                return IntPoly::zero();
            }
            let (s, ip) = c.to_intpoly();
            ip.shift((s - qmin) as usize)
        })
        .collect();
    (p.a_shift(), qmin, body)
}

fn from_aq(a_shift: i64, q_shift: i64, body: AqPoly) -> LaurentPoly2 {
    LaurentPoly2::from_a_parts(
        a_shift,
        body.into_iter().map(|c| LaurentPoly::from_intpoly(q_shift, c)).collect(),
    )
}

/// A canonical fraction of Laurent polynomials in `a` and `q`.
///
/// The denominator has minimal `a`- and `q`-exponents zero and a positive
/// leading coefficient (highest `a`-degree, then highest `q`-degree), and
/// the pair is coprime in `Z[a, q]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun2 {
    num: LaurentPoly2,
    den: LaurentPoly2,
}

impl RatFun2 {
    pub fn new(num: LaurentPoly2, den: LaurentPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (na, nq, n) = to_aq(&num);
        let (da, dq, d) = to_aq(&den);
        let g = aq_gcd(&n, &d);
        let (mut n, mut d) = if g.len() == 1 && g[0].is_one() {
            (n, d)
        } else {
            (
                aq_div_exact(&n, &g).expect("gcd divides numerator"),
                aq_div_exact(&d, &g).expect("gcd divides denominator"),
            )
        };
        if d.last().unwrap().lc().unwrap().is_negative() {
            n = n.iter().map(IntPoly::neg).collect();
            d = d.iter().map(IntPoly::neg).collect();
        }
        Ok(Self { num: from_aq(na - da, nq - dq, n), den: from_aq(0, 0, d) })
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly2::zero(), den: LaurentPoly2::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly2::one())
    }

    pub fn from_poly(p: LaurentPoly2) -> Self {
        Self { num: p, den: LaurentPoly2::one() }
    }

    pub fn monomial(c: impl Into<BigInt>, d: i64, e: i64) -> Self {
        Self::from_poly(LaurentPoly2::monomial(c, d, e))
    }

    pub fn num(&self) -> &LaurentPoly2 {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Self::new(base.num.pow(k), base.den.pow(k))
    }

    /// Substitute `a ↦ q^n`.
    pub fn substitute_a(&self, n: i64) -> Result<RatFun> {
        let den = self.den.substitute_a(n);
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at a = q^{n}")));
        }
        RatFun::new(self.num.substitute_a(n), den)
    }

    /// Substitute `a ↦ a^{-1}`, `q ↦ q^{-1}`.
    pub fn mirror(&self) -> Self {
        Self::new(self.num.mirror(), self.den.mirror()).expect("nonzero denominator")
    }

    /// `a`-exponents of numerator and denominator taken mod 2.
    pub fn a_parities(&self) -> (Vec<i64>, Vec<i64>) {
        (self.num.a_parities(), self.den.a_parities())
    }
}

impl Add for &RatFun2 {
    type Output = RatFun2;
    fn add(self, o: &RatFun2) -> RatFun2 {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun2::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFun2::new(num, &self.den * &o.den).unwrap()
    }
}

impl Neg for &RatFun2 {
    type Output = RatFun2;
    fn neg(self) -> RatFun2 {
        RatFun2 { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFun2 {
    type Output = RatFun2;
    fn sub(self, o: &RatFun2) -> RatFun2 {
        self + &(-o)
    }
}

impl Mul for &RatFun2 {
    type Output = RatFun2;
    fn mul(self, o: &RatFun2) -> RatFun2 {
        if self.is_zero() || o.is_zero() {
            return RatFun2::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun2::from_poly(&self.num * &o.num);
        }
        RatFun2::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

forward_owned_binops!(RatFun2; Add add, Sub sub, Mul mul);

impl Neg for RatFun2 {
    type Output = RatFun2;
    fn neg(self) -> RatFun2 {
        -&self
    }
}

impl fmt::Display for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun2({self})")
    }
}

impl FromStr for RatFun2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s, &['a', 'q']);
        let (n, d) = p.fraction()?;
        p.finish()?;
        let num = terms_to_aq(n)?;
        let den = match d {
            Some(d) => terms_to_aq(d)?,
            None => LaurentPoly2::one(),
        };
        RatFun2::new(num, den)
    }
}

/// `(q^2 - 1)` as a Laurent polynomial; it shows up everywhere.
pub(crate) fn q2_minus_1() -> LaurentPoly {
    LaurentPoly::from_terms([(0, -1), (2, 1)])
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    /// Integer constant test used by callers that need `f == c`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && (self.num.is_zero() || (self.num.is_monomial() && self.num.min_exp() == Some(0))) {
            return Some(self.num.coeff(0));
        }
        None
    }
}
