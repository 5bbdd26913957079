//! Exact arithmetic: Laurent polynomials in `q` and in `(a, q)`, canonical
//! fractions of both, truncated series at `q = 0`, and the quadratic
//! extension by `ν` with `ν² = δ⁻¹`.

mod intpoly;
mod laurent;
mod nu;
mod ratfun;
mod series;
mod text;

pub use laurent::{LaurentPoly, LaurentPoly2};
pub use nu::{specialize_a, NuValue};
pub use ratfun::{RatFun, RatFun2};
pub use series::{series_expand, TruncSeries};

pub(crate) use ratfun::q2_minus_1;
