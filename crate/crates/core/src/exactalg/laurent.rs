use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with integer coefficients.
///
/// Stored as `q^shift * (c_0 + c_1 q + ...)` with `c_0 != 0` and no trailing
/// zeros. Zero is the empty coefficient list with shift 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    shift: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_parts(e, vec![c.into()])
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Build from `q^shift * Σ coeffs[i] q^i`; normalizes zeros away.
    pub fn from_parts(shift: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { shift: shift + lead as i64, coeffs }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_parts(lo, coeffs)
    }

    pub(crate) fn from_intpoly(shift: i64, p: IntPoly) -> Self {
        Self::from_parts(shift, p.coeffs)
    }

    /// The polynomial part `p` with `self = q^min_exp * p`, `p(0) != 0`.
    pub(crate) fn to_intpoly(&self) -> (i64, IntPoly) {
        (self.shift, IntPoly { coeffs: self.coeffs.clone() })
    }

    /// The `q`-integer `(q^{2n}-1)/(q^2-1)`, valid for every integer `n`.
    pub fn qint(n: i64) -> Self {
        if n >= 0 {
            Self::from_terms((0..n).map(|k| (2 * k, 1)))
        } else {
            // -(q^{-2} + q^{-4} + ... + q^{2n})
            Self::from_terms((n..0).map(|k| (2 * k, -1)))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.shift + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.shift;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.shift + i as i64, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Leading (highest-degree) coefficient.
    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { shift: self.shift, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift_by(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { shift: self.shift + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `q ↦ q^{-1}`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let top = self.max_exp().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { shift: -top, coeffs }
    }

    /// Substitute `q ↦ q^k` for a nonzero integer `k`.
    pub fn substitute_q_power(&self, k: i64) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q0.is_zero() {
            if self.shift < 0 {
                return Err(Error::Pole("negative power of q evaluated at q = 0".into()));
            }
            return Ok(if self.shift == 0 {
                BigRational::from_integer(self.coeffs[0].clone())
            } else {
                BigRational::zero()
            });
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        Ok(acc * pow_rational(q0, self.shift))
    }

    /// Integer content (gcd of coefficients), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.to_intpoly().1.content()
    }
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow::pow(base, e.unsigned_abs() as usize)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (src, off) in [(self, self.shift - lo), (other, other.shift - lo)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                coeffs[off as usize + i] += c;
            }
        }
        LaurentPoly::from_parts(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { shift: self.shift, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        self + &(-other)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let (_, a) = self.to_intpoly();
        let (_, b) = other.to_intpoly();
        LaurentPoly::from_intpoly(self.shift + other.shift, a.mul(&b))
    }
}

forward_owned_binops!(LaurentPoly; Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_terms(f, self.terms().map(|(e, c)| (c.clone(), vec![('q', e)])))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Laurent polynomial in `a` and `q` with integer coefficients, stored as a
/// Laurent polynomial in `a` whose coefficients are Laurent polynomials in `q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    a_shift: i64,
    coeffs: Vec<LaurentPoly>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_q(LaurentPoly::one())
    }

    /// `c * a^d * q^e`.
    pub fn monomial(c: impl Into<BigInt>, d: i64, e: i64) -> Self {
        Self::from_a_parts(d, vec![LaurentPoly::monomial(c, e)])
    }

    pub fn from_q(p: LaurentPoly) -> Self {
        Self::from_a_parts(0, vec![p])
    }

    /// `a^d * p(q)`.
    pub fn a_pow_times(d: i64, p: LaurentPoly) -> Self {
        Self::from_a_parts(d, vec![p])
    }

    pub fn from_a_parts(a_shift: i64, mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { a_shift: a_shift + lead as i64, coeffs }
    }

    /// Build from `(a-exponent, q-exponent, coefficient)` triples.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, i64, BigInt)> =
            terms.into_iter().map(|(d, e, c)| (d, e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut buckets: Vec<Vec<(i64, BigInt)>> = vec![Vec::new(); (hi - lo + 1) as usize];
        for (d, e, c) in terms {
            buckets[(d - lo) as usize].push((e, c));
        }
        Self::from_a_parts(lo, buckets.into_iter().map(LaurentPoly::from_terms).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.a_shift == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_a(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.a_shift)
    }

    pub fn max_a(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.a_shift + self.coeffs.len() as i64 - 1)
    }

    /// Minimal `q`-exponent over all terms.
    pub fn min_q(&self) -> Option<i64> {
        self.coeffs.iter().filter_map(LaurentPoly::min_exp).min()
    }

    /// True when no positive or negative power of `a` occurs.
    pub fn is_a_free(&self) -> bool {
        self.is_zero() || (self.a_shift == 0 && self.coeffs.len() == 1)
    }

    /// The coefficient of `a^d`.
    pub fn a_coeff(&self, d: i64) -> LaurentPoly {
        let i = d - self.a_shift;
        if i < 0 {
            return LaurentPoly::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero `a`-coefficients as `(a-exponent, coefficient)`.
    pub fn a_terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.a_shift + i as i64, c))
    }

    /// All nonzero terms as `(a-exponent, q-exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.a_terms().flat_map(|(d, p)| p.terms().map(move |(e, c)| (d, e, c)))
    }

    /// The set of `a`-exponents reduced mod 2.
    pub fn a_parities(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.a_terms().map(|(d, _)| d.rem_euclid(2)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn scale_q(&self, p: &LaurentPoly) -> Self {
        Self::from_a_parts(self.a_shift, self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Multiply by `a^d q^e`.
    pub fn shift_by(&self, d: i64, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { a_shift: self.a_shift + d, coeffs: self.coeffs.iter().map(|c| c.shift_by(e)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `a ↦ q^n`.
    pub fn substitute_a(&self, n: i64) -> LaurentPoly {
        self.a_terms()
            .fold(LaurentPoly::zero(), |acc, (d, p)| &acc + &p.shift_by(d * n))
    }

    /// Substitute `a ↦ a^{-1}` and `q ↦ q^{-1}`.
    pub fn mirror(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let top = self.max_a().unwrap();
        let coeffs = self.coeffs.iter().rev().map(LaurentPoly::invert_q).collect();
        Self { a_shift: -top, coeffs }
    }

    pub(crate) fn a_shift(&self) -> i64 {
        self.a_shift
    }

    pub(crate) fn a_coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, other: &LaurentPoly2) -> LaurentPoly2 {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.a_shift.min(other.a_shift);
        let hi = self.max_a().unwrap().max(other.max_a().unwrap());
        let mut coeffs = vec![LaurentPoly::zero(); (hi - lo + 1) as usize];
        for (src, off) in [(self, self.a_shift - lo), (other, other.a_shift - lo)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                let slot = &mut coeffs[off as usize + i];
                *slot = &*slot + c;
            }
        }
        LaurentPoly2::from_a_parts(lo, coeffs)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { a_shift: self.a_shift, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, other: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-other)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, other: &LaurentPoly2) -> LaurentPoly2 {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly2::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let slot = &mut coeffs[i + j];
                *slot = &*slot + &(a * b);
            }
        }
        LaurentPoly2::from_a_parts(self.a_shift + other.a_shift, coeffs)
    }
}

forward_owned_binops!(LaurentPoly2; Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_terms(
            f,
            self.terms().map(|(d, e, c)| (c.clone(), vec![('a', d), ('q', e)])),
        )
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

/// Sign of the leading coefficient, used by canonical forms.
pub(crate) fn is_negative_lead(p: &LaurentPoly) -> bool {
    p.lc().is_some_and(|c| c.is_negative())
}
