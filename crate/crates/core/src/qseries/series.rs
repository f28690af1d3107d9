use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Coefficient ring of a truncated power series in q.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(c: i64) -> Self;
    fn add_assign(&mut self, other: &Self);
    fn sub_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self += ±α^alpha·other`; univariate coefficients only accept `alpha == 0`.
    fn add_alpha_shifted(&mut self, other: &Self, alpha: u32, negative: bool);
    /// Renders one nonzero term `c·q^power`; `first` drops the leading `+`.
    fn render_term(&self, power: usize, first: bool) -> String;
}

fn q_power(power: usize) -> String {
    match power {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{power}"),
    }
}

fn render_integer_term(c: &BigInt, power: usize, first: bool) -> String {
    let sign = match (first, c.is_negative()) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    let mag = c.abs();
    if power > 0 && mag.is_one() {
        format!("{sign}{}", q_power(power))
    } else {
        format!("{sign}{mag}{}", q_power(power))
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_int(c: i64) -> Self {
        BigInt::from(c)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add_alpha_shifted(&mut self, other: &Self, alpha: u32, negative: bool) {
        assert_eq!(alpha, 0, "univariate coefficient cannot carry α^{alpha}");
        if negative {
            *self -= other;
        } else {
            *self += other;
        }
    }
    fn render_term(&self, power: usize, first: bool) -> String {
        render_integer_term(self, power, first)
    }
}

impl Coefficient for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(1)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_int(c: i64) -> Self {
        Poly::constant(c)
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }
    fn sub_assign(&mut self, other: &Self) {
        self.sub_assign_ref(other);
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add_alpha_shifted(&mut self, other: &Self, alpha: u32, negative: bool) {
        self.add_shifted(other, alpha as usize, negative);
    }
    fn render_term(&self, power: usize, first: bool) -> String {
        match self.as_constant() {
            Some(c) => render_integer_term(&c, power, first),
            None => {
                let sep = if first { "" } else { " + " };
                format!("{sep}({self}){}", q_power(power))
            }
        }
    }
}

/// Power series in q known modulo `q^(order+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

/// Exact integer coefficients.
pub type Series = PowerSeries<BigInt>;
/// Coefficients are integer polynomials in α.
pub type BiSeries = PowerSeries<Poly>;

impl<C: Coefficient> PowerSeries<C> {
    /// `coeffs[j]` is the coefficient of `q^j`; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, C::one())
    }

    /// `c·q^power`, or zero when `power > order`.
    pub fn monomial(order: usize, power: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> &C {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, power: usize) -> &mut C {
        &mut self.coeffs[power]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Drops precision down to `order`. Panics when asked to raise it.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise precision from {} to {order}", self.order());
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign(b);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign(b);
        }
        Ok(out)
    }

    /// Cauchy product truncated to the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(C::neg).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&C::from_int(c))
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for j in k..=n {
            out.coeffs[j] = self.coeffs[j - k].clone();
        }
        out
    }

    /// Inverse series; the constant term must be exactly 1.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = C::one();
        for j in 1..=n {
            let mut acc = C::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() && !out.coeffs[j - i].is_zero() {
                    acc.add_assign(&self.coeffs[i].mul(&out.coeffs[j - i]));
                }
            }
            out.coeffs[j] = acc.neg();
        }
        Ok(out)
    }

    /// Multiplies in place by `1 + sign·α^alpha·q^power`.
    pub fn mul_factor(&mut self, negative: bool, alpha: u32, power: usize) {
        let n = self.order();
        if power > n {
            return;
        }
        if power == 0 {
            let copy = self.clone();
            for (a, b) in self.coeffs.iter_mut().zip(&copy.coeffs) {
                a.add_alpha_shifted(b, alpha, negative);
            }
            return;
        }
        for j in (power..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            hi[0].add_alpha_shifted(&lo[j - power], alpha, negative);
        }
    }

    /// Divides in place by `1 + sign·α^alpha·q^power` with `power ≥ 1`.
    pub fn div_factor(&mut self, negative: bool, alpha: u32, power: usize) {
        assert!(power >= 1, "dividing by a factor with a q^0 term is not a series operation");
        let n = self.order();
        for j in power..=n {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            hi[0].add_alpha_shifted(&lo[j - power], alpha, !negative);
        }
    }

    /// The substitution `q ↦ -q`.
    pub fn twist_q_negate(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// Lowest power where the two series differ, with both coefficients.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, C, C)> {
        let n = self.order().min(other.order());
        (0..=n)
            .find(|&j| self.coeffs[j] != other.coeffs[j])
            .map(|j| (j, self.coeffs[j].clone(), other.coeffs[j].clone()))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        /// Panics on an order mismatch; use the `try_` form to handle it.
        impl<C: Coefficient> $tr for &PowerSeries<C> {
            type Output = PowerSeries<C>;
            fn $method(self, rhs: &PowerSeries<C>) -> PowerSeries<C> {
                self.$try(rhs).expect("series orders must match")
            }
        }
        impl<C: Coefficient> $tr for PowerSeries<C> {
            type Output = PowerSeries<C>;
            fn $method(self, rhs: PowerSeries<C>) -> PowerSeries<C> {
                self.$try(&rhs).expect("series orders must match")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Coefficient> Neg for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        self.negate()
    }
}

impl<C: Coefficient> Neg for PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        self.negate()
    }
}

impl<C: Coefficient> fmt::Display for PowerSeries<C> {
    /// Ascending powers of q, zero terms omitted, e.g. `1 + q - 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            f.write_str(&c.render_term(j, first))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Where `α` is sent by [`BiSeries::substitute_alpha`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaTarget {
    One,
    Q,
}

impl BiSeries {
    /// Specializes α to 1, or to q (so `α^i q^j ↦ q^(i+j)`, dropping what
    /// lands above the order).
    pub fn substitute_alpha(&self, target: AlphaTarget) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for (j, poly) in self.coeffs.iter().enumerate() {
            match target {
                AlphaTarget::One => out.coeffs[j] = poly.eval_one(),
                AlphaTarget::Q => {
                    for (i, c) in poly.coeffs().iter().enumerate() {
                        if i + j <= n {
                            out.coeffs[i + j] += c;
                        }
                    }
                }
            }
        }
        out
    }

    /// True when the α-degree of the `q^j` coefficient never exceeds `j`.
    pub fn alpha_degree_bounded(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(j, p)| p.degree().is_none_or(|d| d <= j))
    }

    /// Multiplication by a polynomial in α.
    pub fn scale_poly(&self, p: &Poly) -> BiSeries {
        self.scale(p)
    }
}

impl Series {
    /// The same series viewed with constant α-polynomial coefficients.
    pub fn lift(&self) -> BiSeries {
        PowerSeries { coeffs: self.coeffs.iter().cloned().map(Poly::constant).collect() }
    }
}

struct RawInt<'a>(&'a BigInt);

impl Serialize for RawInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Exact digits regardless of size.
        RawValue::from_string(self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

struct RawPoly<'a>(&'a Poly);

impl Serialize for RawPoly<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.coeffs().len()))?;
        for c in self.0.coeffs() {
            seq.serialize_element(&RawInt(c))?;
        }
        seq.end()
    }
}

/// Serializes a coefficient as a bare JSON integer (any size).
pub(crate) fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    RawInt(c).serialize(s)
}

pub(crate) fn serialize_poly<S: Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    RawPoly(p).serialize(s)
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a [BigInt]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for c in self.0 {
                    seq.serialize_element(&RawInt(c))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("Series", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a [Poly]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for p in self.0 {
                    seq.serialize_element(&RawPoly(p))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("BiSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

fn parse_raw_int(raw: &RawValue) -> Result<BigInt> {
    raw.get()
        .trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("coefficient `{}`: {e}", raw.get())))
}

fn parse_header<T>(order: usize, coeffs: &[T]) -> Result<()> {
    if coeffs.len() != order + 1 {
        return Err(Error::Parse(format!(
            "order {order} needs {} coefficients, found {}",
            order + 1,
            coeffs.len()
        )));
    }
    Ok(())
}

impl Series {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Series> {
        #[derive(Deserialize)]
        struct RawSeries<'a> {
            order: usize,
            #[serde(borrow)]
            coeffs: Vec<&'a RawValue>,
        }
        let raw: RawSeries = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        parse_header(raw.order, &raw.coeffs)?;
        let coeffs = raw.coeffs.iter().map(|r| parse_raw_int(r)).collect::<Result<Vec<_>>>()?;
        Ok(Series::from_coeffs(coeffs))
    }
}

impl BiSeries {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<BiSeries> {
        #[derive(Deserialize)]
        struct RawBiSeries<'a> {
            order: usize,
            #[serde(borrow)]
            coeffs: Vec<Vec<&'a RawValue>>,
        }
        let raw: RawBiSeries =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        parse_header(raw.order, &raw.coeffs)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|p| Ok(Poly::new(p.iter().map(|r| parse_raw_int(r)).collect::<Result<Vec<_>>>()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BiSeries::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(c: &[i64]) -> Series {
        Series::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn bi(c: &[&[i64]]) -> BiSeries {
        BiSeries::from_coeffs(c.iter().map(|p| Poly::from_ints(p)).collect())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&uni(&[1, 1, 0]) * &uni(&[1, -1, 0]), uni(&[1, 0, -1]));
        let a = uni(&[3, -1, 4, 1]);
        assert!((&a + &a.negate()).is_zero());
        let x = bi(&[&[1], &[0, 1], &[], &[]]);
        let y = bi(&[&[1], &[], &[0, 1], &[]]);
        assert_eq!(&x * &y, bi(&[&[1], &[0, 1], &[0, 1], &[0, 0, 1]]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = uni(&[1, 1]).try_add(&uni(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
        assert!(uni(&[1]).try_mul(&uni(&[1, 2])).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(uni(&[1, 1, 0, 0]).reciprocal().unwrap(), uni(&[1, -1, 1, -1]));
        assert_eq!(Series::one(5).reciprocal().unwrap(), Series::one(5));
        // (1+q)^2 = 1 + 2q + q^2; the inverse multiplies back to 1.
        let sq = uni(&[1, 2, 1, 0, 0]);
        let inv = sq.reciprocal().unwrap();
        assert_eq!(inv, uni(&[1, -2, 3, -4, 5]));
        assert_eq!(&sq * &inv, Series::one(4));
        assert_eq!(uni(&[2, 1]).reciprocal(), Err(Error::NonUnitConstant));
        assert_eq!(bi(&[&[1, 1], &[]]).reciprocal(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn factor_multiplication_and_division() {
        let mut s = Series::one(6);
        s.mul_factor(false, 0, 1);
        s.mul_factor(false, 0, 2);
        assert_eq!(s, uni(&[1, 1, 1, 1, 0, 0, 0]));
        s.div_factor(false, 0, 2);
        assert_eq!(s, uni(&[1, 1, 0, 0, 0, 0, 0]));
        let mut b = BiSeries::one(3);
        b.mul_factor(false, 1, 0);
        assert_eq!(b, bi(&[&[1, 1], &[], &[], &[]]));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(uni(&[1, 1, 1]).twist_q_negate(), uni(&[1, -1, 1]));
        let a = uni(&[5, -2, 7, 3]);
        assert_eq!(a.twist_q_negate().twist_q_negate(), a);
    }

    #[test]
    fn substitution_examples() {
        let s = bi(&[&[0, 1], &[0, 0, 1]]);
        assert_eq!(s.substitute_alpha(AlphaTarget::One), uni(&[1, 1]));
        let t = bi(&[&[], &[0, 1], &[]]);
        assert_eq!(t.substitute_alpha(AlphaTarget::Q), uni(&[0, 0, 1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(uni(&[1, 1, -2, 3]).to_string(), "1 + q - 2q^2 + 3q^3");
        assert_eq!(uni(&[0, -1, 0, 0, 1]).to_string(), "-q + q^4");
        assert_eq!(Series::zero(3).to_string(), "0");
        assert_eq!(bi(&[&[1], &[-1], &[0, 1], &[0, 1, -1]]).to_string(), "1 - q + (α)q^2 + (α - α^2)q^3");
        assert_eq!(bi(&[&[1, 1]]).to_string(), "(1 + α)");
    }

    #[test]
    fn json_shape() {
        assert_eq!(uni(&[1, -1, 0]).to_json(), r#"{"order":2,"coeffs":[1,-1,0]}"#);
        assert_eq!(bi(&[&[1], &[], &[0, -2]]).to_json(), r#"{"order":2,"coeffs":[[1],[],[0,-2]]}"#);
        let big = Series::from_coeffs(vec![BigInt::from(10).pow(40), BigInt::from(-3)]);
        assert_eq!(big.to_json(), r#"{"order":1,"coeffs":[10000000000000000000000000000000000000000,-3]}"#);
        assert_eq!(Series::from_json(&big.to_json()).unwrap(), big);
        assert!(Series::from_json(r#"{"order":3,"coeffs":[1]}"#).is_err());
    }
}
