//! The framed HOMFLY-PT polynomial of braid closures.
//!
//! A braid word is sent to the Hecke algebra, where `σ_i ↦ g_i` with
//! `g² = (1−q²)g + q²`, and closed up with the Ocneanu trace. The result is
//! normalized so that the unknot is `μ = (a−a⁻¹)/(q−q⁻¹)` and the skein
//! relation `q⁻¹L(σ) − qL(σ⁻¹) = (q⁻¹−q)L(1)` holds. A positive curl then
//! contributes `qa⁻¹` and a negative curl `q⁻¹a`.

mod hecke;
mod rmatrix;

pub use hecke::{hecke_mul_gen, length, HeckeElement, Perm, TraceEngine, ZPoly};
pub use rmatrix::rt_invariant;

use crate::braid::BraidWord;
use crate::exactalg::{q2_minus_1, LaurentPoly, LaurentPoly2, RatFun2};

/// `a² − 1`.
fn a2_minus_1() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(0, 0, -1), (2, 0, 1)])
}

/// `μ = (a−a⁻¹)/(q−q⁻¹)`.
pub fn mu() -> RatFun2 {
    RatFun2::new(a2_minus_1().shift_by(-1, 1), LaurentPoly2::from_q(q2_minus_1())).unwrap()
}

/// Parameters of the Markov trace: `homfly(w) = μⁿ · d^{writhe} · τ(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceParams {
    pub z: RatFun2,
    pub d: RatFun2,
    pub mu: RatFun2,
}

impl TraceParams {
    /// `z = (q²−1)/(a²−1)`, `d = 1`.
    pub fn standard() -> Self {
        let z = RatFun2::new(LaurentPoly2::from_q(q2_minus_1()), a2_minus_1()).unwrap();
        Self { z, d: RatFun2::one(), mu: mu() }
    }
}

/// Evaluate a polynomial in `z` with `Z[q^±]` coefficients.
fn eval_zpoly(p: &ZPoly, z: &RatFun2) -> RatFun2 {
    let mut acc = RatFun2::zero();
    for c in p.iter().rev() {
        acc = &(&acc * z) + &RatFun2::from_poly(LaurentPoly2::from_q(c.clone()));
    }
    acc
}

/// Ocneanu trace of `e` under the given parameters.
pub fn ocneanu_trace(e: &HeckeElement, p: &TraceParams) -> RatFun2 {
    eval_zpoly(&TraceEngine::new().trace(e), &p.z)
}

/// `μⁿ · d^{writhe} · τ(w)` for arbitrary parameters.
pub fn homfly_with(w: &BraidWord, p: &TraceParams) -> RatFun2 {
    let t = ocneanu_trace(&HeckeElement::from_braid(w), p);
    let scale = &p.mu.pow(w.strands() as i64).unwrap() * &p.d.pow(w.writhe()).unwrap();
    &scale * &t
}

/// The framed HOMFLY-PT polynomial of the closure of `w`.
pub fn homfly(w: &BraidWord) -> RatFun2 {
    let trace = TraceEngine::new().trace(&HeckeElement::from_braid(w));
    assemble(&trace, w.strands())
}

/// `μⁿ Σ c_k zᵏ` over the common denominator `(q²−1)ⁿ`: with the standard
/// parameters this is `a⁻ⁿqⁿ Σ c_k (a²−1)^{n−k} (q²−1)^k / (q²−1)ⁿ`.
fn assemble(trace: &ZPoly, n: usize) -> RatFun2 {
    let a2m1 = a2_minus_1();
    let q2m1 = q2_minus_1();
    let mut num = LaurentPoly2::zero();
    for (k, c) in trace.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        debug_assert!(k < n.max(1));
        let qpart = c * &q2m1.pow(k as u32);
        let term = a2m1.pow((n - k) as u32).scale_q(&qpart);
        num = &num + &term;
    }
    let num = num.shift_by(-(n as i64), n as i64);
    RatFun2::new(num, LaurentPoly2::from_q(q2m1.pow(n as u32))).unwrap()
}

/// Colored unknot `μ_k = ∏_{j<k} (aq^{−j}−a⁻¹q^{j})/(q−q⁻¹) · q^{k(k−1)/2}/{k}!`.
pub fn mu_colored(k: u32) -> RatFun2 {
    assert!(k >= 1, "colour must be positive");
    let mut acc = RatFun2::one();
    for j in 0..k as i64 {
        let num = LaurentPoly2::from_terms([(1, -j, 1), (-1, j, -1)]);
        // (q − q⁻¹) = q⁻¹(q²−1)
        let den = LaurentPoly2::from_q(q2_minus_1().shift_by(-1));
        acc = &acc * &RatFun2::new(num, den).unwrap();
    }
    let mut fact = LaurentPoly::one();
    for i in 1..=k as i64 {
        fact = &fact * &LaurentPoly::qint(i);
    }
    let kk = k as i64;
    let scale = RatFun2::new(LaurentPoly2::monomial(1, 0, kk * (kk - 1) / 2), LaurentPoly2::from_q(fact)).unwrap();
    &acc * &scale
}

/// The `k`-coloured curl factor `a^{−sign·k} q^{sign·k(2k−1)}`.
pub fn homfly_twist_coeff(k: u32, sign: i32) -> RatFun2 {
    let k = k as i64;
    let s = sign.signum() as i64;
    RatFun2::monomial(1, -s * k, s * k * (2 * k - 1))
}
