use std::fmt;

use super::laurent::{LaurentPoly, LaurentPoly2};
use super::ratfun::{parse_ratfun, RatFun, RatFun2};
use super::text::Parser;
use crate::error::{Error, Result};

/// An element `even + odd·ν` of the quadratic extension `ν² = δ⁻¹`.
///
/// Every value carries its `δ`; arithmetic between values with different
/// `δ` is refused.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NuValue {
    even: RatFun,
    odd: RatFun,
    delta: RatFun,
}

impl NuValue {
    pub fn new(even: RatFun, odd: RatFun, delta: RatFun) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::InvalidArgument("delta must be nonzero".into()));
        }
        Ok(Self { even, odd, delta })
    }

    pub fn from_even(even: RatFun, delta: &RatFun) -> Self {
        Self::new(even, RatFun::zero(), delta.clone()).expect("nonzero delta")
    }

    pub fn from_odd(odd: RatFun, delta: &RatFun) -> Self {
        Self::new(RatFun::zero(), odd, delta.clone()).expect("nonzero delta")
    }

    /// `ν` itself.
    pub fn nu(delta: &RatFun) -> Self {
        Self::from_odd(RatFun::one(), delta)
    }

    pub fn one(delta: &RatFun) -> Self {
        Self::from_even(RatFun::one(), delta)
    }

    pub fn even(&self) -> &RatFun {
        &self.even
    }

    pub fn odd(&self) -> &RatFun {
        &self.odd
    }

    pub fn delta(&self) -> &RatFun {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// `Some(0)` or `Some(1)` for values homogeneous in `ν`, `None` when both
    /// parts are nonzero. Zero counts as even.
    pub fn nu_parity(&self) -> Option<u8> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => Some(0),
            (true, false) => Some(1),
            (false, false) => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.delta != other.delta {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { even: &self.even + &other.even, odd: &self.odd + &other.odd, delta: self.delta.clone() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let oo = &self.odd * &other.odd;
        let oo = if oo.is_zero() { oo } else { oo.checked_div(&self.delta)? };
        Ok(Self {
            even: &(&self.even * &other.even) + &oo,
            odd: &(&self.even * &other.odd) + &(&self.odd * &other.even),
            delta: self.delta.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        Self { even: -&self.even, odd: -&self.odd, delta: self.delta.clone() }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        Self { even: &self.even * c, odd: &self.odd * c, delta: self.delta.clone() }
    }

    /// `even² − odd²·δ⁻¹`.
    pub fn norm(&self) -> Result<RatFun> {
        let oo = &self.odd * &self.odd;
        Ok(&(&self.even * &self.even) - &oo.checked_div(&self.delta)?)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm()?;
        if n.is_zero() {
            return Err(Error::ZeroNorm);
        }
        let ninv = n.inv()?;
        Ok(Self { even: &self.even * &ninv, odd: -(&self.odd * &ninv), delta: self.delta.clone() })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.delta);
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// `ν^k` reduced with `ν² = δ⁻¹`.
    pub fn nu_pow(k: i64, delta: &RatFun) -> Result<Self> {
        let half = k.div_euclid(2);
        let part = delta.pow(-half)?;
        Ok(if k.rem_euclid(2) == 0 { Self::from_even(part, delta) } else { Self::from_odd(part, delta) })
    }

    /// Parse `(even) + (odd)*v`, a bare fraction, or `(odd)*v`.
    pub fn parse_with_delta(s: &str, delta: &RatFun) -> Result<Self> {
        let mut p = Parser::new(s, &['q']);
        let first = parse_ratfun(&mut p)?;
        if p.eat_char(b'*') {
            p.expect(b'v')?;
            p.finish()?;
            return Ok(Self::from_odd(first, delta));
        }
        if p.eat_char(b'+') {
            let odd = parse_ratfun(&mut p)?;
            p.expect(b'*')?;
            p.expect(b'v')?;
            p.finish()?;
            return Self::new(first, odd, delta.clone());
        }
        p.finish()?;
        Ok(Self::from_even(first, delta))
    }
}

impl fmt::Display for NuValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*v", self.even, self.odd)
    }
}

impl fmt::Debug for NuValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NuValue({self}; delta = {})", self.delta)
    }
}

/// Even and odd parts of `P(a = qνδ)` scaled by a common factor that
/// depends only on the exponent range `lo..=hi` of `δ`.
fn split_specialize(p: &LaurentPoly2, dn: &LaurentPoly, dd: &LaurentPoly, lo: i64, hi: i64) -> (LaurentPoly, LaurentPoly) {
    let mut even = LaurentPoly::zero();
    let mut odd = LaurentPoly::zero();
    for (j, c) in p.a_terms() {
        let k = delta_power(j);
        let term = &(&c.shift_by(j) * &dn.pow((k - lo) as u32)) * &dd.pow((hi - k) as u32);
        if j.rem_euclid(2) == 0 {
            even = &even + &term;
        } else {
            odd = &odd + &term;
        }
    }
    (even, odd)
}

/// The power of `δ` produced by `a^j ↦ q^j δ^k ν^{j mod 2}`.
fn delta_power(j: i64) -> i64 {
    j.div_euclid(2) + j.rem_euclid(2)
}

/// Substitute `a = qνδ` into `f`.
pub fn specialize_a(f: &RatFun2, delta: &RatFun) -> Result<NuValue> {
    if delta.is_zero() {
        return Err(Error::InvalidArgument("delta must be nonzero".into()));
    }
    if f.is_zero() {
        return Ok(NuValue::from_even(RatFun::zero(), delta));
    }
    let dn = delta.num();
    let dd = delta.den();
    let ks = f.num().a_terms().chain(f.den().a_terms()).map(|(j, _)| delta_power(j));
    let (lo, hi) = ks.fold((i64::MAX, i64::MIN), |(lo, hi), k| (lo.min(k), hi.max(k)));
    let (ne, no) = split_specialize(f.num(), dn, dd, lo, hi);
    let (de, dodd) = split_specialize(f.den(), dn, dd, lo, hi);
    // (ne + no ν)/(de + do ν) with ν² = dd/dn, cleared by dn
    let den = &(&(&de * &de) * dn) - &(&(&dodd * &dodd) * dd);
    if den.is_zero() {
        return Err(Error::Pole("denominator specializes to zero".into()));
    }
    let even_num = &(&(&ne * &de) * dn) - &(&(&no * &dodd) * dd);
    let odd_num = &(&(&no * &de) - &(&ne * &dodd)) * dn;
    NuValue::new(RatFun::new(even_num, den.clone())?, RatFun::new(odd_num, den)?, delta.clone())
}
