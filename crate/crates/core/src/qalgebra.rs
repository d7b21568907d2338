//! Exact arithmetic kernel.
//!
//! Everything in this crate is computed over [`BigRational`]. Two derived
//! value types carry the formal variables:
//!
//! * [`QSeries`] is a power series in `q` truncated at a fixed order `N`,
//!   i.e. an element of `Q[q] / (q^N)`, stored densely.
//! * [`BetaPoly`] is a polynomial in the bookkeeping variable `β`, truncated
//!   at a fixed degree, with coefficients in any [`CoefficientRing`]. The
//!   alias [`BetaQPoly`] is the case used for content products, where the
//!   coefficients are themselves q-series.
//!
//! Binary operations on series of different orders truncate to the smaller
//! order, so results are always correct modulo `q^min(N_a, N_b)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Minimal ring interface shared by exact scalars and truncated series.
///
/// Used where the same algorithm runs over a numeric specialization and over
/// a formal one (monomial symmetric functions, content products).
pub trait CoefficientRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, factor: &BigRational) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl CoefficientRing for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, factor: &BigRational) -> Self {
        self * factor
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Precondition(format!("cannot parse {text:?} as a rational p/q"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn rational_string(value: &BigRational) -> String {
    value.to_string()
}

/// `serialize_with` adapter writing a rational as its canonical string.
pub fn serialize_rational<S: Serializer>(value: &BigRational, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// Truncated power series `Σ_{j<N} a_j q^j` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigRational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        QSeries { coeffs: vec![BigRational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(value: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// `value · q^power`, or zero when `power >= order`.
    pub fn monomial(power: usize, value: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = value;
        }
        s
    }

    /// Builds a series from its leading coefficients; missing entries are
    /// zero and entries at or beyond `order` are dropped.
    pub fn from_coeffs(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| integer(c)).collect(), order)
    }

    /// The Bose factor `q^a / (1 - q^a) = Σ_{m≥1} q^{a m}`.
    pub fn bose_factor(a: usize, order: usize) -> Self {
        assert!(a >= 1, "Bose factor needs a positive exponent");
        let mut s = Self::zero(order);
        let mut e = a;
        while e < order {
            s.coeffs[e] = BigRational::one();
            e += a;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^power`; zero beyond the truncation order.
    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Multiplicative inverse modulo `q^N`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b = vec![BigRational::zero(); n];
        b[0] = inv0.clone();
        for k in 1..n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &b[k - j];
                }
            }
            b[k] = -(acc * &inv0);
        }
        Ok(QSeries { coeffs: b })
    }

    /// Evaluates the truncated polynomial `Σ_{j<N} a_j q^j` at a rational `q`.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + c)
    }

    fn combine(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let order = self.order().min(other.order());
        QSeries { coeffs: (0..order).map(|j| f(&self.coeffs[j], &other.coeffs[j])).collect() }
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &'a QSeries) -> QSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &'a QSeries) -> QSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &'a QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &'a QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl CoefficientRing for QSeries {
    fn zero_like(&self) -> Self {
        QSeries::zero(self.order())
    }
    fn one_like(&self) -> Self {
        QSeries::one(self.order())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, factor: &BigRational) -> Self {
        QSeries::scale(self, factor)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match (j, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) if mag.is_integer() => write!(f, "{mag}")?,
                (_, false) => write!(f, "({mag})")?,
            }
            match j {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{self}]")
    }
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(rational_string).collect();
        let mut st = serializer.serialize_struct("QSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Polynomial in `β` truncated at degree `beta_order`, coefficients in `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaPoly<T> {
    coeffs: Vec<T>,
}

/// β-polynomial with q-series coefficients.
pub type BetaQPoly = BetaPoly<QSeries>;

impl<T: CoefficientRing> BetaPoly<T> {
    /// The constant polynomial `unit`, using `unit` as the template for zeros.
    pub fn constant(unit: T, beta_order: usize) -> Self {
        let zero = unit.zero_like();
        let mut coeffs = vec![zero; beta_order + 1];
        coeffs[0] = unit;
        BetaPoly { coeffs }
    }

    pub fn one(template: &T, beta_order: usize) -> Self {
        Self::constant(template.one_like(), beta_order)
    }

    /// `1 + slope·β`.
    pub fn linear(slope: T, beta_order: usize) -> Self {
        let mut p = Self::one(&slope, beta_order);
        if beta_order >= 1 {
            p.coeffs[1] = slope;
        }
        p
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a β-polynomial needs at least a constant term");
        BetaPoly { coeffs }
    }

    pub fn beta_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `β^degree`; `None` beyond the truncation degree.
    pub fn coeff(&self, degree: usize) -> Option<&T> {
        self.coeffs.get(degree)
    }

    /// Product truncated at the smaller of the two β-degrees.
    pub fn mul(&self, other: &Self) -> Self {
        let top = self.beta_order().min(other.beta_order());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; top + 1];
        for (i, a) in self.coeffs.iter().take(top + 1).enumerate() {
            if a.is_zero_value() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(top + 1 - i).enumerate() {
                if !b.is_zero_value() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        BetaPoly { coeffs: out }
    }

    /// Substitutes `β ↦ -β`.
    pub fn negate_beta(&self) -> Self {
        let minus_one = -BigRational::one();
        BetaPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { c.scale(&minus_one) } else { c.clone() })
                .collect(),
        }
    }
}

impl BetaQPoly {
    pub fn q_order(&self) -> usize {
        self.coeffs[0].order()
    }
}
