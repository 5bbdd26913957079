//! The specializations `a = qν_xδ_x` (right) and `a = qν_x^♭δ_x^♭` (flat)
//! of the HOMFLY-PT polynomial, with the closed-form scalars they produce.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exactalg::{specialize_a, LaurentPoly, LaurentPoly2, NuValue, RatFun, RatFun2};
use crate::homfly::homfly;
use crate::qnum::{left_qdelta, left_qrational, qdelta, qrational, Rational};

/// Which q-deformation of `x` a context uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Right,
    Flat,
}

/// A rational `x` together with its `δ_x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XContext {
    x: Rational,
    flavor: Flavor,
    delta: RatFun,
}

impl XContext {
    pub fn new(x: Rational, flavor: Flavor) -> Result<Self> {
        let delta = match flavor {
            Flavor::Right => qdelta(&x),
            Flavor::Flat => left_qdelta(&x),
        };
        if delta.is_zero() {
            return Err(Error::InvalidArgument(format!("δ vanishes at x = {x}")));
        }
        Ok(Self { x, flavor, delta })
    }

    pub fn right(x: Rational) -> Self {
        Self::new(x, Flavor::Right).expect("δ_x is never zero")
    }

    pub fn flat(x: Rational) -> Self {
        Self::new(x, Flavor::Flat).expect("δ_x^♭ is never zero")
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn delta(&self) -> &RatFun {
        &self.delta
    }

    /// The q-rational of `x + shift` in this context's flavor.
    pub fn qnum(&self, shift: i64) -> RatFun {
        let y = &self.x + Rational::from_integer(shift.into());
        match self.flavor {
            Flavor::Right => qrational(&y),
            Flavor::Flat => left_qrational(&y),
        }
    }

    pub fn nu(&self) -> NuValue {
        NuValue::nu(&self.delta)
    }
}

impl fmt::Display for XContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.flavor {
            Flavor::Right => write!(f, "x:{}", self.x),
            Flavor::Flat => write!(f, "flat:{}", self.x),
        }
    }
}

/// A value of the quadratic extension attached to a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XValue {
    pub context: XContext,
    pub value: NuValue,
}

impl fmt::Display for XValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn bind(ctx: &XContext, value: NuValue) -> XValue {
    XValue { context: ctx.clone(), value }
}

/// Specialize an already computed HOMFLY-PT value.
pub fn specialize_homfly(h: &RatFun2, ctx: &XContext) -> Result<XValue> {
    Ok(bind(ctx, specialize_a(h, &ctx.delta)?))
}

/// `[K]_x` for the closure of `w`.
pub fn x_invariant(w: &BraidWord, ctx: &XContext) -> Result<XValue> {
    specialize_homfly(&homfly(w), ctx)
}

/// `[K]_x^♭` for the closure of `w`.
pub fn flat_invariant(w: &BraidWord, x: &Rational) -> Result<XValue> {
    x_invariant(w, &XContext::flat(x.clone()))
}

/// `ν^{−(writhe + components)}·v`, which is `ν`-free for every closure
/// value; returns its even part.
pub fn normalize_value(v: &XValue, writhe: i64, components: usize) -> Result<RatFun> {
    let shift = NuValue::nu_pow(-(writhe + components as i64), v.context.delta())?;
    let n = v.value.try_mul(&shift)?;
    if !n.odd().is_zero() {
        return Err(Error::Parity(format!(
            "normalized value has a nonzero ν-odd part (writhe {writhe}, {components} components)"
        )));
    }
    Ok(n.even().clone())
}

/// Framing- and stabilization-independent version of `[K]_x`.
pub fn normalized_invariant(w: &BraidWord, ctx: &XContext) -> Result<RatFun> {
    let stats = w.closure_stats();
    normalize_value(&x_invariant(w, ctx)?, stats.writhe, stats.components)
}

fn qbinomial_in(ctx: &XContext, k: u32) -> RatFun {
    let mut num = RatFun::one();
    let mut den = LaurentPoly::one();
    for i in 0..k as i64 {
        num = &num * &ctx.qnum(-i);
        den = &den * &LaurentPoly::qint(i + 1);
    }
    num.checked_div(&RatFun::from_poly(den)).expect("q-factorials are nonzero")
}

/// `u_k = q^{k(k−1)} ν^k {x choose k}`.
pub fn colored_unknot_u(ctx: &XContext, k: u32) -> Result<XValue> {
    assert!(k >= 1, "colour must be positive");
    let kk = k as i64;
    let c = qbinomial_in(ctx, k).shift_by(kk * (kk - 1));
    Ok(bind(ctx, NuValue::nu_pow(kk, &ctx.delta)?.scale(&c)))
}

/// `u_k` through `u_k = q^{2k−2} ν ({x−k+1}/{k}) u_{k−1}`, `u_0 = 1`.
pub fn colored_unknot_u_recursive(ctx: &XContext, k: u32) -> Result<XValue> {
    let mut u = NuValue::one(&ctx.delta);
    for j in 1..=k as i64 {
        let step = ctx.qnum(1 - j).checked_div(&RatFun::from_poly(LaurentPoly::qint(j)))?.shift_by(2 * j - 2);
        u = u.try_mul(&ctx.nu())?.scale(&step);
    }
    Ok(bind(ctx, u))
}

/// `q^{k(k−1)} {x choose k}`.
pub fn colored_stab_unknot(ctx: &XContext, k: u32) -> RatFun {
    assert!(k >= 1, "colour must be positive");
    let kk = k as i64;
    qbinomial_in(ctx, k).shift_by(kk * (kk - 1))
}

/// `ν^{sign·k} q^{sign·2k(k−1)}`.
pub fn twist_coeff_x(ctx: &XContext, k: u32, sign: i32) -> Result<XValue> {
    let s = sign.signum() as i64;
    let kk = k as i64;
    let v = NuValue::nu_pow(s * kk, &ctx.delta)?.scale(&RatFun::q_pow(s * 2 * kk * (kk - 1)));
    Ok(bind(ctx, v))
}

/// `(aq^{−r} − a⁻¹q^{r})/(q − q⁻¹)`.
pub fn digon_coefficient(r: i64) -> RatFun2 {
    let num = LaurentPoly2::from_terms([(1, -r, 1), (-1, r, -1)]);
    let den = LaurentPoly2::from_terms([(0, 1, 1), (0, -1, -1)]);
    RatFun2::new(num, den).expect("nonzero denominator")
}

/// Specialization of the digon coefficient.
pub fn digon_specialize(r: i64, ctx: &XContext) -> Result<XValue> {
    Ok(bind(ctx, specialize_a(&digon_coefficient(r), &ctx.delta)?))
}

/// `q^r ν {x − r}`.
pub fn digon_closed_form(r: i64, ctx: &XContext) -> XValue {
    bind(ctx, NuValue::from_odd(ctx.qnum(-r).shift_by(r), &ctx.delta))
}

/// All `(α, ε)` with `α` in range and `ε = ±1` such that
/// `q^{−2} + q^{−2+2ε} = q^{α−2} + q^{α+4ε}`.
pub fn verify_uniqueness_constraint(alpha: std::ops::RangeInclusive<i64>) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for a in alpha {
        for e in [-1i64, 1] {
            let lhs = LaurentPoly::from_terms([(-2, 1), (-2 + 2 * e, 1)]);
            let rhs = LaurentPoly::from_terms([(a - 2, 1), (a + 4 * e, 1)]);
            if lhs == rhs {
                out.insert((a, e));
            }
        }
    }
    out
}

/// How a sweep value was made `ν`-free.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepFlag {
    /// The value had `ν`-degree 0; its even part is reported.
    Even,
    /// The value had odd `ν`-degree; its square is reported.
    Squared,
    /// The normalized invariant is reported.
    Normalized,
}

impl SweepFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepFlag::Even => "even",
            SweepFlag::Squared => "squared",
            SweepFlag::Normalized => "normalized",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub x: Rational,
    pub result: Result<(BigRational, SweepFlag)>,
}

/// The `ν`-free quantity reported by a sweep, before evaluation.
pub fn sweep_quantity(v: &XValue, writhe: i64, components: usize, normalized: bool) -> Result<(RatFun, SweepFlag)> {
    if normalized {
        return Ok((normalize_value(v, writhe, components)?, SweepFlag::Normalized));
    }
    match v.value.nu_parity() {
        Some(0) => Ok((v.value.even().clone(), SweepFlag::Even)),
        Some(_) => Ok((v.value.try_mul(&v.value)?.even().clone(), SweepFlag::Squared)),
        None => Err(Error::Parity("value is not homogeneous in ν".into())),
    }
}

/// Evaluate the right x-invariant of `w` at `q = q0` for each `x`.
pub fn numeric_sweep(w: &BraidWord, q0: &BigRational, xs: &[Rational], normalized: bool) -> Vec<SweepRow> {
    let h = homfly(w);
    let stats = w.closure_stats();
    xs.iter()
        .map(|x| {
            let result = (|| {
                let v = specialize_homfly(&h, &XContext::right(x.clone()))?;
                let (f, flag) = sweep_quantity(&v, stats.writhe, stats.components, normalized)?;
                Ok((f.eval(q0)?, flag))
            })();
            SweepRow { x: x.clone(), result }
        })
        .collect()
}
