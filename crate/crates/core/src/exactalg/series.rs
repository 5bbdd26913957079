use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ratfun::RatFun;

/// Laurent series at `q = 0`, known exactly up to and including `q^order`.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    order: i64,
    tail_start: i64,
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    /// Build from `(exponent, coefficient)` pairs; terms above `order` are dropped.
    pub fn from_terms<I>(order: i64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let map: BTreeMap<i64, BigRational> = terms
            .into_iter()
            .filter(|(e, c)| *e <= order && !c.is_zero())
            .fold(BTreeMap::new(), |mut m, (e, c)| {
                *m.entry(e).or_insert_with(BigRational::zero) += c;
                m
            });
        Self::from_map(order, map)
    }

    fn from_map(order: i64, map: BTreeMap<i64, BigRational>) -> Self {
        let nonzero: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(&(lo, _)) = nonzero.first() else {
            return Self { order, tail_start: order + 1, coeffs: Vec::new() };
        };
        let mut coeffs = vec![BigRational::zero(); (order - lo + 1) as usize];
        for (e, c) in nonzero {
            coeffs[(e - lo) as usize] = c;
        }
        Self { order, tail_start: lo, coeffs }
    }

    /// Highest exponent whose coefficient is exact.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent with a nonzero coefficient (`order + 1` for the zero series).
    pub fn tail_start(&self) -> i64 {
        self.tail_start
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        if e < self.tail_start || e > self.order {
            return BigRational::zero();
        }
        self.coeffs[(e - self.tail_start) as usize].clone()
    }

    /// Nonzero coefficients in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.tail_start + i as i64, c))
    }

    /// Drop everything above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self::from_terms(order, self.terms().map(|(e, c)| (e, c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let terms = self.terms().chain(other.terms()).map(|(e, c)| (e, c.clone()));
        Self::from_terms(order, terms)
    }

    /// Product, exact up to `min(order_a + tail_b, order_b + tail_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_terms(self.order.min(other.order), []);
        }
        let order = (self.order + other.tail_start).min(other.order + self.tail_start);
        let mut map = BTreeMap::new();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                if i + j <= order {
                    *map.entry(i + j).or_insert_with(BigRational::zero) += a * b;
                }
            }
        }
        Self::from_map(order, map)
    }
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.terms().eq(other.terms())
    }
}

impl Eq for TruncSeries {}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (e, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            let abs = c.abs();
            let coeff = if abs.is_one() && e != 0 { String::new() } else { abs.to_string() };
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            let sep = if coeff.is_empty() || var.is_empty() { "" } else { "*" };
            write!(f, "{sign}{coeff}{sep}{var}")?;
        }
        if self.is_zero() {
            f.write_str("0")?;
        }
        write!(f, "+O(q^{})", self.order + 1)
    }
}

/// Taylor expansion of `f` at `q = 0` up to `q^order` by long division.
pub fn series_expand(f: &RatFun, order: i64) -> TruncSeries {
    if f.is_zero() {
        return TruncSeries::from_terms(order, []);
    }
    let (shift, num) = f.num().to_intpoly();
    let den = &f.den().to_intpoly().1;
    let d0 = BigRational::from_integer(den.coeffs[0].clone());
    let count = order - shift + 1;
    if count <= 0 {
        return TruncSeries::from_terms(order, []);
    }
    let count = count as usize;
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = BigRational::from_integer(num.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero));
        for j in 1..=k.min(den.coeffs.len() - 1) {
            let dj = &den.coeffs[j];
            if !dj.is_zero() {
                acc -= &out[k - j] * BigRational::from_integer(dj.clone());
            }
        }
        out.push(acc / &d0);
    }
    TruncSeries::from_terms(order, out.into_iter().enumerate().map(|(k, c)| (shift + k as i64, c)))
}
