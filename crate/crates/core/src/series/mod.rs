//! Exact truncated formal power series in `q`.
//!
//! [`Series`] carries arbitrary-precision integer coefficients `c_0..=c_N`;
//! [`BiSeries`] carries, for every power of `q`, an exact integer polynomial
//! in a second variable `z`. Only the `q` direction is ever truncated.
//!
//! Products of the form `(a q^j; q^k)_n` are described by [`Poch`] and
//! applied factor by factor through the [`Truncated`] trait, which costs
//! `O(N)` per factor instead of a full series multiplication.

mod bivariate;
mod univariate;

pub use bivariate::{BiSeries, ZPoly};
pub use univariate::Series;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::error::{Error, Result};

/// The coefficient `±z^p` in a binomial factor `1 - (±z^p) q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coef {
    pub negative: bool,
    pub z_power: u32,
}

impl Coef {
    pub const ONE: Coef = Coef {
        negative: false,
        z_power: 0,
    };
    pub const MINUS_ONE: Coef = Coef {
        negative: true,
        z_power: 0,
    };
    pub const Z: Coef = Coef {
        negative: false,
        z_power: 1,
    };
    pub const MINUS_Z: Coef = Coef {
        negative: true,
        z_power: 1,
    };

    pub fn new(negative: bool, z_power: u32) -> Self {
        Coef { negative, z_power }
    }

    pub fn sign(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// The product `(a q^start; q^step)_count = prod_{i < count} (1 - a q^{start + i*step})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Poch {
    pub coef: Coef,
    pub start: usize,
    pub step: usize,
    pub count: Count,
}

impl Poch {
    pub fn new(coef: Coef, start: usize, step: usize, count: Count) -> Self {
        Poch {
            coef,
            start,
            step,
            count,
        }
    }

    /// `(q^start; q^step)_n`.
    pub fn q(start: usize, step: usize, n: usize) -> Self {
        Self::new(Coef::ONE, start, step, Count::Finite(n))
    }

    /// `(q^start; q^step)_inf`.
    pub fn q_inf(start: usize, step: usize) -> Self {
        Self::new(Coef::ONE, start, step, Count::Infinite)
    }

    /// `(-q^start; q^step)_n`.
    pub fn neg_q(start: usize, step: usize, n: usize) -> Self {
        Self::new(Coef::MINUS_ONE, start, step, Count::Finite(n))
    }

    /// `(-q^start; q^step)_inf`.
    pub fn neg_q_inf(start: usize, step: usize) -> Self {
        Self::new(Coef::MINUS_ONE, start, step, Count::Infinite)
    }

    /// Replaces the coefficient `±1` by `±z^p`.
    pub fn with_z(mut self, p: u32) -> Self {
        self.coef.z_power = p;
        self
    }

    /// Exponents of the factors that are not `1` modulo `q^{order+1}`.
    pub fn exponents(&self, order: usize) -> Result<Vec<usize>> {
        if self.count == Count::Infinite && self.step == 0 {
            return Err(Error::domain(
                "pochhammer",
                "infinite product with step 0 never stabilises",
            ));
        }
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            if let Count::Finite(n) = self.count {
                if i >= n {
                    break;
                }
            }
            let e = self.start + i * self.step;
            // factors only grow (or repeat when step is 0)
            if e > order {
                break;
            }
            out.push(e);
            i += 1;
        }
        Ok(out)
    }
}

/// Operations shared by univariate and bivariate truncated series.
pub trait Truncated: Clone + Sized {
    fn order(&self) -> usize;
    fn zero(order: usize) -> Self;
    fn one(order: usize) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_series(&mut self, rhs: &Self);

    /// Multiplies in place by `1 - c q^degree`.
    fn mul_binomial(&mut self, c: Coef, degree: usize) -> Result<()>;

    /// Divides in place by `1 - c q^degree`.
    fn div_binomial(&mut self, c: Coef, degree: usize) -> Result<()>;

    fn mul_poch(mut self, p: &Poch) -> Result<Self> {
        for e in p.exponents(self.order())? {
            self.mul_binomial(p.coef, e)?;
        }
        Ok(self)
    }

    fn div_poch(mut self, p: &Poch) -> Result<Self> {
        for e in p.exponents(self.order())? {
            self.div_binomial(p.coef, e)?;
        }
        Ok(self)
    }
}

/// Builds `(a q^j; q^k)_n` as a univariate series; `a` must not involve `z`.
pub fn pochhammer(p: &Poch, order: usize) -> Result<Series> {
    Series::one(order).mul_poch(p)
}

/// Builds `(a q^j; q^k)_n` as a bivariate series.
pub fn pochhammer_bi(p: &Poch, order: usize) -> Result<BiSeries> {
    BiSeries::one(order).mul_poch(p)
}

/// Substitutions acting on `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSubstitution {
    /// `q -> -q`
    NegateQ,
    /// `q -> q^k`
    Power(u32),
}

/// Substitutions eliminating `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZSubstitution {
    One,
    MinusOne,
    /// `z -> coeff * q^exponent`; `exponent` may be negative.
    Monomial {
        coeff: i64,
        exponent: i64,
    },
}

/// Default divergence guard for [`sum_terms`]: `10 * sqrt(N) + 10` terms.
pub fn default_term_cap(order: usize) -> usize {
    (10.0 * (order as f64).sqrt()).ceil() as usize + 10
}

/// Guard for sums whose terms only grow linearly in degree.
pub fn linear_term_cap(order: usize) -> usize {
    order + 2
}

/// Sums `term(start) + term(start + 1) + ...` through `order`.
///
/// The builder returns `None` (or a series that vanishes through `order`)
/// once the lowest degree of its terms has passed `order`; lowest degrees
/// must be nondecreasing in `n`. Needing more than `cap` terms is an error.
pub fn sum_terms<S, F>(order: usize, start: usize, cap: Option<usize>, mut term: F) -> Result<S>
where
    S: Truncated,
    F: FnMut(usize) -> Result<Option<S>>,
{
    let cap = cap.unwrap_or_else(|| default_term_cap(order));
    let mut acc = S::zero(order);
    for idx in 0.. {
        if idx >= cap {
            return Err(Error::Divergence { order, cap });
        }
        match term(start + idx)? {
            None => break,
            Some(t) if t.is_zero() => break,
            Some(t) => acc.add_assign_series(&t),
        }
    }
    Ok(acc)
}

pub(crate) fn big_number(v: &BigInt) -> serde_json::Number {
    v.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&big_number(v), s)
}

pub(crate) fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&big_number(c))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_stop_at_order() {
        assert_eq!(Poch::q_inf(1, 1).exponents(4).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(Poch::q(2, 3, 2).exponents(40).unwrap(), vec![2, 5]);
        assert!(Poch::q(7, 1, 3).exponents(5).unwrap().is_empty());
    }

    #[test]
    fn infinite_with_zero_step_is_rejected() {
        assert!(Poch::q_inf(0, 0).exponents(10).is_err());
        assert!(Poch::q_inf(2, 0).exponents(10).is_err());
    }

    #[test]
    fn empty_product_is_one() {
        let p = pochhammer(&Poch::q(1, 1, 0), 6).unwrap();
        assert_eq!(p, Series::one(6));
    }

    #[test]
    fn default_cap_matches_guideline() {
        assert_eq!(default_term_cap(100), 110);
        assert_eq!(default_term_cap(0), 10);
    }

    #[test]
    fn sum_over_empty_range_is_zero() {
        let s: Series = sum_terms(10, 1, None, |_| Ok(None)).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn runaway_sum_hits_guard() {
        let r: Result<Series> = sum_terms(10, 0, Some(5), |_| Ok(Some(Series::one(10))));
        assert_eq!(r.unwrap_err(), Error::Divergence { order: 10, cap: 5 });
    }
}
