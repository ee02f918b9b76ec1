use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::univariate::{power_name, write_term};
use super::{serialize_bigints, Coef, QSubstitution, Series, Truncated, ZSubstitution};
use crate::error::{Error, Result};

/// An exact integer polynomial in `z`, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); power + 1];
        v[power] = c;
        ZPoly(v)
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = ZPoly(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree in `z`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Coefficient of `z^power` (zero past the degree).
    pub fn coeff(&self, power: usize) -> BigInt {
        self.0.get(power).cloned().unwrap_or_default()
    }

    /// Nonzero `(power, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `self += sign * z^shift * other`.
    pub fn add_shifted(&mut self, other: &ZPoly, shift: usize, negative: bool) {
        if other.is_zero() {
            return;
        }
        let need = other.0.len() + shift;
        if self.0.len() < need {
            self.0.resize(need, BigInt::zero());
        }
        for (i, c) in other.0.iter().enumerate() {
            if negative {
                self.0[i + shift] -= c;
            } else {
                self.0[i + shift] += c;
            }
        }
        self.trim();
    }

    pub fn add_assign(&mut self, other: &ZPoly) {
        self.add_shifted(other, 0, false);
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        let mut p = ZPoly(self.0.iter().map(|x| x * c).collect());
        p.trim();
        p
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// `z -> z^k`.
    fn stretch(&self, k: usize) -> ZPoly {
        let mut p = ZPoly::zero();
        for (i, c) in self.terms() {
            p.add_shifted(&ZPoly::constant(c.clone()), i * k, false);
        }
        p
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.terms() {
            write_term(f, first, c, &power_name("z", i))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigints(&self.0, s)
    }
}

/// A power series in `q` whose coefficients are exact polynomials in `z`.
///
/// Alongside the coefficients it tracks a slope `r` such that every term
/// `z^a q^b` of the untruncated series has `b >= r*a`; `None` means no term
/// carries `z`. The slope is what makes `z -> c q^e` with `e < 0` safe.
#[derive(Clone, Debug)]
pub struct BiSeries {
    coeffs: Vec<ZPoly>,
    q_per_z: Option<u32>,
}

fn min_slope(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn slope_of(z_power: usize, q_power: usize) -> Option<u32> {
    q_power
        .checked_div(z_power)
        .map(|s| s.min(u32::MAX as usize) as u32)
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        BiSeries {
            coeffs: vec![ZPoly::zero(); order + 1],
            q_per_z: None,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, 0, order)
    }

    /// `c * z^z_power * q^q_power`.
    pub fn monomial(c: impl Into<BigInt>, z_power: usize, q_power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.q_per_z = slope_of(z_power, q_power);
        if q_power <= order {
            s.coeffs[q_power] = ZPoly::monomial(c, z_power);
        }
        s
    }

    /// A univariate series viewed as constant in `z`.
    pub fn from_series(x: &Series) -> Self {
        BiSeries {
            coeffs: x
                .coeffs()
                .iter()
                .map(|c| ZPoly::constant(c.clone()))
                .collect(),
            q_per_z: None,
        }
    }

    /// Builds from explicit coefficients; the slope is read off the stored terms.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> ZPoly) -> Self {
        let coeffs: Vec<ZPoly> = (0..=order).map(f).collect();
        let mut q_per_z = None;
        for (b, p) in coeffs.iter().enumerate() {
            for (a, _) in p.terms() {
                q_per_z = min_slope(q_per_z, slope_of(a, b));
            }
        }
        BiSeries { coeffs, q_per_z }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, q_power: usize) -> &ZPoly {
        &self.coeffs[q_power]
    }

    pub fn coeffs(&self) -> &[ZPoly] {
        &self.coeffs
    }

    pub fn q_per_z(&self) -> Option<u32> {
        self.q_per_z
    }

    /// Coefficient of `z^m q^n`.
    pub fn coeff_at(&self, m: usize, n: usize) -> BigInt {
        self.coeffs[n].coeff(m)
    }

    /// The series in `q` multiplying `z^m`.
    pub fn z_coefficient(&self, m: usize) -> Series {
        Series::from_fn(self.order(), |n| self.coeffs[n].coeff(m))
    }

    pub fn truncate(&self, order: usize) -> BiSeries {
        let order = order.min(self.order());
        BiSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            q_per_z: self.q_per_z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZPoly::is_zero)
    }

    /// Multiplication by `z^a q^b`.
    pub fn shift(&self, a: usize, b: usize) -> BiSeries {
        let order = self.order();
        let mut out = BiSeries::zero(order);
        for d in b..=order {
            out.coeffs[d].add_shifted(&self.coeffs[d - b], a, false);
        }
        out.q_per_z = min_slope(self.q_per_z, slope_of(a, b));
        out
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> BiSeries {
        let c = c.into();
        BiSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(&c)).collect(),
            q_per_z: self.q_per_z,
        }
    }

    pub fn add_monomial(&mut self, c: impl Into<BigInt>, z_power: usize, q_power: usize) {
        if let Some(p) = self.coeffs.get_mut(q_power) {
            p.add_shifted(&ZPoly::constant(c), z_power, false);
        }
        self.q_per_z = min_slope(self.q_per_z, slope_of(z_power, q_power));
    }

    /// `q -> q^k` (order becomes `k(N+1) - 1`) or `q -> -q`.
    pub fn substitute_q(&self, rule: QSubstitution) -> Result<BiSeries> {
        match rule {
            QSubstitution::NegateQ => Ok(BiSeries {
                coeffs: self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(d, p)| {
                        if d % 2 == 1 {
                            p.scale(&BigInt::from(-1))
                        } else {
                            p.clone()
                        }
                    })
                    .collect(),
                q_per_z: self.q_per_z,
            }),
            QSubstitution::Power(0) => Err(Error::domain(
                "substitute",
                "q -> q^0 is not a substitution",
            )),
            QSubstitution::Power(k) => {
                let ku = k as usize;
                let order = ku * (self.order() + 1) - 1;
                let mut out = BiSeries::zero(order);
                for (d, p) in self.coeffs.iter().enumerate() {
                    out.coeffs[d * ku] = p.clone();
                }
                out.q_per_z = self.q_per_z.map(|r| r.saturating_mul(k));
                Ok(out)
            }
        }
    }

    /// `z -> z^k`.
    pub fn substitute_z_power(&self, k: u32) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(|p| p.stretch(k as usize)).collect(),
            q_per_z: if k == 0 {
                None
            } else {
                self.q_per_z.map(|r| r / k)
            },
        }
    }

    /// Eliminates `z`.
    ///
    /// For `z -> c q^e` with `e < 0` the result is exact only through
    /// `ceil((N+1)(r+e)/r) - 1`, where `r` is the tracked slope; `r + e`
    /// must be positive and no stored term may land at a negative degree.
    pub fn substitute_z(&self, rule: ZSubstitution) -> Result<Series> {
        let order = self.order();
        match rule {
            ZSubstitution::One => Ok(self.eval_z(&BigInt::one())),
            ZSubstitution::MinusOne => Ok(self.eval_z(&BigInt::from(-1))),
            ZSubstitution::Monomial { coeff, exponent } if exponent >= 0 => {
                let e = exponent as usize;
                let c = BigInt::from(coeff);
                let mut out = Series::zero(order);
                for (b, p) in self.coeffs.iter().enumerate() {
                    let mut cp = BigInt::one();
                    for a in 0..p.coeffs().len() {
                        let d = b + e * a;
                        if d > order {
                            break;
                        }
                        if !p.coeffs()[a].is_zero() {
                            out.add_monomial(&p.coeffs()[a] * &cp, d);
                        }
                        cp *= &c;
                    }
                }
                Ok(out)
            }
            ZSubstitution::Monomial { coeff, exponent } => {
                let drop = exponent.unsigned_abs() as usize;
                let new_order = match self.q_per_z {
                    None => order,
                    Some(r) => {
                        let r = r as usize;
                        if r <= drop {
                            return Err(Error::domain(
                                "substitute",
                                format!(
                                    "z -> q^{exponent} needs every z^a q^b to satisfy b > {drop}a"
                                ),
                            ));
                        }
                        ((order + 1) * (r - drop)).div_ceil(r) - 1
                    }
                };
                let c = BigInt::from(coeff);
                let mut out = Series::zero(new_order);
                for (b, p) in self.coeffs.iter().enumerate() {
                    let mut cp = BigInt::one();
                    for (a, x) in p.coeffs().iter().enumerate() {
                        if !x.is_zero() {
                            let d = (b as i64) - (drop * a) as i64;
                            if d < 0 {
                                return Err(Error::domain(
                                    "substitute",
                                    format!("term z^{a} q^{b} would land at q^{d}"),
                                ));
                            }
                            out.add_monomial(x * &cp, d as usize);
                        }
                        cp *= &c;
                    }
                }
                Ok(out)
            }
        }
    }

    fn eval_z(&self, z: &BigInt) -> Series {
        Series::from_fn(self.order(), |n| self.coeffs[n].eval(z))
    }

    pub fn first_difference(&self, other: &BiSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl Truncated for BiSeries {
    fn order(&self) -> usize {
        BiSeries::order(self)
    }

    fn zero(order: usize) -> Self {
        BiSeries::zero(order)
    }

    fn one(order: usize) -> Self {
        BiSeries::one(order)
    }

    fn is_zero(&self) -> bool {
        BiSeries::is_zero(self)
    }

    fn add_assign_series(&mut self, rhs: &Self) {
        self.coeffs.truncate(rhs.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign(b);
        }
        self.q_per_z = min_slope(self.q_per_z, rhs.q_per_z);
    }

    fn mul_binomial(&mut self, c: Coef, degree: usize) -> Result<()> {
        let p = c.z_power as usize;
        // 1 - c z^p q^degree: subtracting means adding when c is negative
        let negative = !c.negative;
        if degree == 0 {
            for x in &mut self.coeffs {
                let src = x.clone();
                x.add_shifted(&src, p, negative);
            }
        } else {
            for d in (degree..=self.order()).rev() {
                let (lo, hi) = self.coeffs.split_at_mut(d);
                hi[0].add_shifted(&lo[d - degree], p, negative);
            }
        }
        self.q_per_z = min_slope(self.q_per_z, slope_of(p, degree));
        Ok(())
    }

    fn div_binomial(&mut self, c: Coef, degree: usize) -> Result<()> {
        if degree == 0 {
            return Err(Error::NotInvertible(format!(
                "1 {} z^{}",
                if c.negative { "+" } else { "-" },
                c.z_power
            )));
        }
        let p = c.z_power as usize;
        for d in degree..=self.order() {
            let (lo, hi) = self.coeffs.split_at_mut(d);
            hi[0].add_shifted(&lo[d - degree], p, c.negative);
        }
        self.q_per_z = min_slope(self.q_per_z, slope_of(p, degree));
        Ok(())
    }
}

/// Coefficientwise equality through the smaller order.
impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<'a> Add<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;

    fn add(self, rhs: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        out.add_assign_series(rhs);
        out
    }
}

impl<'a> Sub<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        out.add_assign_series(&-rhs);
        out
    }
}

impl<'a> Mul<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order().min(rhs.order());
        let mut out = BiSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    let prod = self.coeffs[i].mul(&rhs.coeffs[j]);
                    out.coeffs[i + j].add_assign(&prod);
                }
            }
        }
        out.q_per_z = min_slope(self.q_per_z, rhs.q_per_z);
        out
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;

    fn neg(self) -> BiSeries {
        self.scale(-1)
    }
}

impl Add for BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: BiSeries) -> BiSeries {
        &self + &rhs
    }
}

impl Sub for BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: BiSeries) -> BiSeries {
        &self - &rhs
    }
}

impl Mul for BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: BiSeries) -> BiSeries {
        &self * &rhs
    }
}

impl Neg for BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        -&self
    }
}

impl fmt::Display for BiSeries {
    /// e.g. `1 + z*q + (z + z^2)*q^2 (order 2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let qn = power_name("q", d);
            let single = p.terms().count() == 1;
            if single {
                let (i, c) = p.terms().next().expect("one term");
                let mut var = power_name("z", i);
                if !qn.is_empty() {
                    var = if var.is_empty() {
                        qn.clone()
                    } else {
                        format!("{var}*{qn}")
                    };
                }
                write_term(f, first, c, &var)?;
            } else {
                f.write_str(if first { "" } else { " + " })?;
                if qn.is_empty() {
                    write!(f, "({p})")?;
                } else {
                    write!(f, "({p})*{qn}")?;
                }
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (order {})", self.order())
    }
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a [ZPoly]);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for p in self.0 {
                    seq.serialize_element(p)?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("BiSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &Rows(&self.coeffs))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{pochhammer, pochhammer_bi, Poch};

    #[test]
    fn zpoly_arithmetic() {
        let a = ZPoly::from_coeffs([1, 1]);
        let b = ZPoly::from_coeffs([1, -1]);
        assert_eq!(a.mul(&b), ZPoly::from_coeffs([1, 0, -1]));
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(4));
        assert_eq!(ZPoly::from_coeffs([0, 0, 0]), ZPoly::zero());
        assert_eq!(ZPoly::from_coeffs([2, 0, -1]).to_string(), "2 - z^2");
    }

    #[test]
    fn z_product_specialises_to_euler() {
        let bi = pochhammer_bi(&Poch::q_inf(1, 1).with_z(1), 20).unwrap();
        let uni = pochhammer(&Poch::q_inf(1, 1), 20).unwrap();
        assert_eq!(bi.substitute_z(ZSubstitution::One).unwrap(), uni);
    }

    #[test]
    fn inverse_z_product_counts_parts() {
        // 1/(zq;q)_inf: coefficient of z^m q^n counts partitions of n into m parts
        let bi = BiSeries::one(10)
            .div_poch(&Poch::q_inf(1, 1).with_z(1))
            .unwrap();
        assert_eq!(bi.coeff_at(2, 6), BigInt::from(3));
        assert_eq!(bi.coeff_at(3, 9), BigInt::from(7));
        assert_eq!(bi.q_per_z(), Some(1));
    }

    #[test]
    fn negative_exponent_needs_slack() {
        let bi = BiSeries::monomial(1, 1, 1, 5);
        assert!(bi
            .substitute_z(ZSubstitution::Monomial {
                coeff: -1,
                exponent: -1
            })
            .is_err());
        let stretched = bi.substitute_q(QSubstitution::Power(2)).unwrap();
        assert_eq!(stretched.order(), 11);
        let s = stretched
            .substitute_z(ZSubstitution::Monomial {
                coeff: -1,
                exponent: -1,
            })
            .unwrap();
        assert_eq!(s.order(), 5);
        assert_eq!(s, Series::monomial(-1, 1, 5));
    }

    #[test]
    fn positive_exponent_keeps_order() {
        let bi = BiSeries::monomial(3, 2, 1, 6);
        let s = bi
            .substitute_z(ZSubstitution::Monomial {
                coeff: 2,
                exponent: 1,
            })
            .unwrap();
        assert_eq!(s, Series::monomial(12, 3, 6));
    }

    #[test]
    fn display_and_json() {
        let mut bi = BiSeries::one(2);
        bi.add_monomial(1, 1, 1);
        bi.add_monomial(1, 1, 2);
        bi.add_monomial(1, 2, 2);
        assert_eq!(bi.to_string(), "1 + z*q + (z + z^2)*q^2 (order 2)");
        assert_eq!(
            serde_json::to_string(&bi).unwrap(),
            r#"{"order":2,"coeffs":[[1],[0,1],[0,1,1]]}"#
        );
    }
}
