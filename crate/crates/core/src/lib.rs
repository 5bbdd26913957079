//! Exact arithmetic for q-deformed rational numbers and the link invariants
//! built from them.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: Laurent polynomials, canonical rational functions,
//!   truncated series and the quadratic `ν`-extension.
//! * [`qnum`]: right and left q-rationals, `δ_x`, q-binomials, q-adic limits.
//! * [`braid`]: braid words and closure statistics.
//! * [`homfly`]: the framed HOMFLY-PT polynomial via a Hecke-algebra Markov
//!   trace, plus an independent `gl_n` R-matrix evaluator.
//! * [`xinv`]: the `a = qν_xδ_x` specializations and their closed forms.
//! * [`table`]: knot tables and collision reports.

macro_rules! forward_owned_binops {
    ($t:ty; $($tr:ident $m:ident),*) => {$(
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { std::ops::$tr::$m(&self, &o) }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, o: &$t) -> $t { std::ops::$tr::$m(&self, o) }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { std::ops::$tr::$m(self, &o) }
        }
    )*};
}

pub mod braid;
pub mod error;
pub mod exactalg;
pub mod homfly;
pub mod qnum;
pub mod table;
pub mod xinv;

pub use braid::{BraidWord, ClosureStats};
pub use error::{Error, Result};
pub use exactalg::{LaurentPoly, LaurentPoly2, NuValue, RatFun, RatFun2, TruncSeries};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use qnum::{EvenCF, Rational};
pub use xinv::{Flavor, XContext, XValue};
