//! The Iwahori–Hecke algebra `H_n` in the basis `T_w` and its Ocneanu trace.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;

/// A permutation in one-line notation, `perm[i]` the image of position `i`.
pub type Perm = Vec<u8>;

/// Number of inversions.
pub fn length(perm: &[u8]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                n += 1;
            }
        }
    }
    n
}

/// A finite combination `Σ c_w T_w` with coefficients in `Z[q^±]`.
///
/// Generators satisfy `g² = (1−q²)g + q²`, so every coefficient produced
/// from a braid word is a Laurent polynomial in `q` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    terms: HashMap<Perm, LaurentPoly>,
}

fn one_minus_q2() -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (2, -1)])
}

impl HeckeElement {
    pub fn identity(strands: usize) -> Self {
        Self::basis((0..strands as u8).collect())
    }

    pub fn basis(perm: Perm) -> Self {
        let strands = perm.len();
        let mut terms = HashMap::new();
        terms.insert(perm, LaurentPoly::one());
        Self { strands, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn coeff(&self, perm: &[u8]) -> LaurentPoly {
        self.terms.get(perm).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(terms: &mut HashMap<Perm, LaurentPoly>, perm: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = terms.entry(perm).or_default();
        *entry = &*entry + &c;
    }

    /// Right multiplication by `g_i^{sign}`, `1 ≤ i ≤ n−1`.
    pub fn mul_gen(&self, i: usize, sign: i32) -> Result<Self> {
        if i == 0 || i >= self.strands {
            return Err(Error::InvalidArgument(format!("generator {i} out of range for {} strands", self.strands)));
        }
        let p = i - 1;
        let q2 = LaurentPoly::q_pow(2);
        let omq2 = one_minus_q2();
        let mut out: HashMap<Perm, LaurentPoly> = HashMap::with_capacity(self.terms.len() * 2);
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(p, p + 1);
            let up = w[p] < w[p + 1];
            if sign > 0 {
                if up {
                    Self::push(&mut out, ws, c.clone());
                } else {
                    Self::push(&mut out, ws, c * &q2);
                    Self::push(&mut out, w.clone(), c * &omq2);
                }
            } else {
                // g⁻¹ = q⁻²g + (1 − q⁻²)
                let qm2 = LaurentPoly::q_pow(-2);
                if up {
                    Self::push(&mut out, ws, c * &qm2);
                    Self::push(&mut out, w.clone(), c * &(&LaurentPoly::one() - &qm2));
                } else {
                    // q⁻²(q² T_{ws} + (1−q²) T_w) + (1−q⁻²) T_w = T_{ws}
                    Self::push(&mut out, ws, c.clone());
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Self { strands: self.strands, terms: out })
    }

    /// The image of a braid word in `H_n`.
    pub fn from_braid(w: &BraidWord) -> Self {
        let mut e = Self::identity(w.strands());
        for &l in w.letters() {
            e = e.mul_gen(l.unsigned_abs() as usize, l.signum()).expect("letters are in range");
        }
        e
    }
}

/// `hecke_mul_gen` in free-function form.
pub fn hecke_mul_gen(e: &HeckeElement, i: usize, sign: i32) -> Result<HeckeElement> {
    e.mul_gen(i, sign)
}

/// A polynomial in the trace parameter `z` with coefficients in `Z[q^±]`;
/// entry `k` is the coefficient of `z^k`.
pub type ZPoly = Vec<LaurentPoly>;

fn zpoly_add_scaled(acc: &mut ZPoly, p: &ZPoly, c: &LaurentPoly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, LaurentPoly::zero());
    }
    for (k, pk) in p.iter().enumerate() {
        if !pk.is_zero() {
            acc[k + shift] = &acc[k + shift] + &(pk * c);
        }
    }
}

/// Ocneanu trace with symbolic `z`, memoized per call.
#[derive(Default)]
pub struct TraceEngine {
    memo: HashMap<Perm, ZPoly>,
}

impl TraceEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `τ(T_w)` as a polynomial in `z`.
    pub fn basis_trace(&mut self, w: &[u8]) -> ZPoly {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let n = w.len();
        let result = if n <= 1 {
            vec![LaurentPoly::one()]
        } else {
            let top = (n - 1) as u8;
            let p = w.iter().position(|&v| v == top).unwrap();
            if p == n - 1 {
                self.basis_trace(&w[..n - 1])
            } else {
                // w = u · s_{n−1} s_{n−2} ⋯ s_{p+1}, so τ(T_w) = z τ(T_u g_{n−2} ⋯ g_{p+1})
                let u: Perm = w.iter().copied().filter(|&v| v != top).collect();
                let mut e = HeckeElement::basis(u);
                for j in (p + 1..n - 1).rev() {
                    e = e.mul_gen(j, 1).expect("in range");
                }
                let inner = self.trace(&e);
                let mut out = vec![LaurentPoly::zero()];
                zpoly_add_scaled(&mut out, &inner, &LaurentPoly::one(), 1);
                out
            }
        };
        self.memo.insert(w.to_vec(), result.clone());
        result
    }

    pub fn trace(&mut self, e: &HeckeElement) -> ZPoly {
        let mut acc: ZPoly = Vec::new();
        let mut keys: Vec<&Perm> = e.terms.keys().collect();
        keys.sort();
        for w in keys {
            let t = self.basis_trace(w);
            zpoly_add_scaled(&mut acc, &t, &e.terms[w], 0);
        }
        while acc.last().is_some_and(LaurentPoly::is_zero) {
            acc.pop();
        }
        acc
    }
}
