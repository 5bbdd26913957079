//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! This is the workhorse underneath the Laurent and rational-function types.
//! Coefficients are stored in ascending order with no trailing zeros, so the
//! zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct IntPoly {
    pub(crate) coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide every coefficient by `c`; panics in debug builds if inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division over the integers. Returns `None` when `d` does not
    /// divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lc = d.lc().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let mut rem = self.clone();
        let lc = d.lc().unwrap().clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.lc().unwrap().clone();
            let mut next = rem.scale(&lc);
            let sub = d.scale(&top).shift(rd - dd);
            next = next.sub(&sub);
            rem = next;
        }
        rem
    }

    /// Greatest common divisor in `Z[x]`, normalized to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_with_content();
        }
        if other.is_zero() {
            return self.primitive_with_content();
        }
        let c = self.content().gcd(&other.content());
        let a = self.primitive();
        let b = other.primitive();
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::constant(c);
        }
        if a == b {
            return a.scale(&c);
        }
        let g = heuristic_gcd(&a, &b).unwrap_or_else(|| primitive_prs_gcd(a, b));
        g.scale(&c)
    }

    fn primitive_with_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.lc().unwrap().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Heuristic gcd (evaluate at a large integer, take the integer gcd and read
/// the result back in a symmetric base-`xi` expansion). Inputs are primitive
/// with positive leading coefficients and degree at least one.
fn heuristic_gcd(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = norm * 2 + 29;
    let max_deg = a.degree().unwrap().max(b.degree().unwrap()) as u64;
    for _ in 0..6 {
        // Avoid integers that would be far larger than the PRS fallback costs.
        if xi.bits() * max_deg > 2_000_000 {
            return None;
        }
        let ga = a.eval(&xi);
        let gb = b.eval(&xi);
        let gamma = ga.gcd(&gb);
        let g = interpolate_symmetric(gamma, &xi).primitive();
        if g.degree().is_some() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
            return Some(g);
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn interpolate_symmetric(mut gamma: BigInt, xi: &BigInt) -> IntPoly {
    let half: BigInt = xi / 2;
    let mut coeffs = Vec::new();
    while !gamma.is_zero() {
        let mut r = gamma.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        gamma = (&gamma - &r) / xi;
        coeffs.push(r);
    }
    IntPoly::from_coeffs(coeffs)
}

fn primitive_prs_gcd(a: IntPoly, b: IntPoly) -> IntPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    loop {
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive();
        }
        if r.degree() == Some(0) {
            return IntPoly::one();
        }
        a = b;
        b = r.primitive();
    }
}
