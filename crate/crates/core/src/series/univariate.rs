use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{serialize_bigints, Coef, QSubstitution, Truncated};
use crate::error::{Error, Result};

/// A power series in `q` known exactly through `q^order`.
#[derive(Clone, Debug)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `coeff * q^degree`, which is the zero series when `degree > order`.
    pub fn monomial(coeff: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff.into();
        }
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> BigInt) -> Self {
        Series {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    pub fn try_from_fn(order: usize, mut f: impl FnMut(usize) -> Result<BigInt>) -> Result<Self> {
        let coeffs = (0..=order).map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Series { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^degree`. Panics past the truncation order.
    pub fn coeff(&self, degree: usize) -> &BigInt {
        &self.coeffs[degree]
    }

    pub fn get(&self, degree: usize) -> Option<&BigInt> {
        self.coeffs.get(degree)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Adds `coeff * q^degree` in place; ignored past the order.
    pub fn add_monomial(&mut self, coeff: impl Into<BigInt>, degree: usize) {
        if let Some(c) = self.coeffs.get_mut(degree) {
            *c += coeff.into();
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for d in k..=order {
            out.coeffs[d] = self.coeffs[d - k].clone();
        }
        out
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn invert(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let order = self.order();
        let mut inv = Series::zero(order);
        inv.coeffs[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv.coeffs[n - i];
                }
            }
            // c0 is its own inverse
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }

    /// `q -> -q` keeps the order; `q -> q^k` stretches it to `k(N+1) - 1`.
    pub fn substitute(&self, rule: QSubstitution) -> Result<Series> {
        match rule {
            QSubstitution::NegateQ => Ok(Series {
                coeffs: self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            }),
            QSubstitution::Power(0) => Err(Error::domain(
                "substitute",
                "q -> q^0 is not a substitution",
            )),
            QSubstitution::Power(k) => {
                let k = k as usize;
                let order = k * (self.order() + 1) - 1;
                let mut out = Series::zero(order);
                for (d, c) in self.coeffs.iter().enumerate() {
                    out.coeffs[d * k] = c.clone();
                }
                Ok(out)
            }
        }
    }

    /// First degree where the two series differ, within the common order.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl Truncated for Series {
    fn order(&self) -> usize {
        Series::order(self)
    }

    fn zero(order: usize) -> Self {
        Series::zero(order)
    }

    fn one(order: usize) -> Self {
        Series::one(order)
    }

    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }

    fn add_assign_series(&mut self, rhs: &Self) {
        self.coeffs.truncate(rhs.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }

    fn mul_binomial(&mut self, c: Coef, degree: usize) -> Result<()> {
        if c.z_power != 0 {
            return Err(Error::domain(
                "pochhammer",
                "univariate series cannot carry z",
            ));
        }
        let order = self.order();
        if degree == 0 {
            let factor = 1 - c.sign();
            for x in &mut self.coeffs {
                *x *= factor;
            }
            return Ok(());
        }
        for d in (degree..=order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(d);
            let src = &lo[d - degree];
            if src.is_zero() {
                continue;
            }
            if c.negative {
                hi[0] += src;
            } else {
                hi[0] -= src;
            }
        }
        Ok(())
    }

    fn div_binomial(&mut self, c: Coef, degree: usize) -> Result<()> {
        if c.z_power != 0 {
            return Err(Error::domain(
                "pochhammer",
                "univariate series cannot carry z",
            ));
        }
        if degree == 0 {
            return Err(Error::NotInvertible((1 - c.sign()).to_string()));
        }
        let order = self.order();
        for d in degree..=order {
            let (lo, hi) = self.coeffs.split_at_mut(d);
            let src = &lo[d - degree];
            if src.is_zero() {
                continue;
            }
            if c.negative {
                hi[0] -= src;
            } else {
                hi[0] += src;
            }
        }
        Ok(())
    }
}

/// Coefficientwise equality through the smaller of the two orders.
impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.add_assign_series(rhs);
        out
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Series> for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &BigInt,
    var: &str,
) -> fmt::Result {
    let negative = coeff.is_negative();
    let mag = coeff.abs();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if var.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(var)
    } else {
        write!(f, "{mag}*{var}")
    }
}

pub(crate) fn power_name(var: &str, d: usize) -> String {
    match d {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{d}"),
    }
}

impl fmt::Display for Series {
    /// Nonzero terms in increasing degree, e.g. `1 - q - q^2 + q^5 + q^7 (order 7)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &power_name("q", d))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (order {})", self.order())
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a [BigInt]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_bigints(self.0, s)
            }
        }
        let mut st = s.serialize_struct("Series", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{pochhammer, Poch};

    fn s(order: usize, c: &[i64]) -> Series {
        Series::from_coeffs(order, c.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = s(5, &[1, 1]);
        let b = s(5, &[1, -1]);
        assert_eq!(&a * &b, s(5, &[1, 0, -1]));
    }

    #[test]
    fn zero_is_additive_identity() {
        let x = s(6, &[3, -1, 4, 1, -5, 9, 2]);
        assert_eq!(&x + &Series::zero(6), x);
    }

    #[test]
    fn geometric_inverse() {
        let inv = s(8, &[1, -1]).invert().unwrap();
        assert_eq!(inv, Series::from_coeffs(8, [1; 9]));
    }

    #[test]
    fn non_unit_constant_is_not_invertible() {
        assert!(matches!(
            s(4, &[2, 1]).invert(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn euler_product_to_order_seven() {
        let e = pochhammer(&Poch::q_inf(1, 1), 7).unwrap();
        assert_eq!(e, s(7, &[1, -1, -1, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn display_skips_zero_terms() {
        let e = pochhammer(&Poch::q_inf(1, 1), 7).unwrap();
        assert_eq!(e.to_string(), "1 - q - q^2 + q^5 + q^7 (order 7)");
        assert_eq!(Series::zero(3).to_string(), "0 (order 3)");
        assert_eq!(s(2, &[0, -3, 2]).to_string(), "-3*q + 2*q^2 (order 2)");
    }

    #[test]
    fn negate_q() {
        let x = s(3, &[1, 1]).substitute(QSubstitution::NegateQ).unwrap();
        assert_eq!(x, s(3, &[1, -1]));
    }

    #[test]
    fn power_substitution_stretches_order() {
        let x = s(3, &[1, 2, 3, 4])
            .substitute(QSubstitution::Power(2))
            .unwrap();
        assert_eq!(x.order(), 7);
        assert_eq!(x, s(7, &[1, 0, 2, 0, 3, 0, 4, 0]));
    }

    #[test]
    fn equality_uses_common_order() {
        assert_eq!(s(3, &[1, 2, 3, 4]), s(1, &[1, 2]));
        assert_ne!(s(3, &[1, 2, 3, 4]), s(2, &[1, 2, 0]));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_string(&s(2, &[1, -1, 0])).unwrap();
        assert_eq!(v, r#"{"order":2,"coeffs":[1,-1,0]}"#);
    }
}
