use std::fmt;

use super::fixed::Fixed;
use crate::error::{ensure, Result};
use crate::exact::ExactRational;

/// Guard bits carried beyond the requested decimal precision.
const GUARD_BITS: u32 = 40;
/// Largest supported precision; error bounds are tracked as `f64`.
pub const MAX_DIGITS: u32 = 280;

/// Working precision, passed explicitly to every numerical routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub fn new(digits: u32) -> Result<Self> {
        ensure!(
            (1..=MAX_DIGITS).contains(&digits),
            InvalidArgument,
            "precision must be between 1 and {MAX_DIGITS} digits, got {digits}"
        );
        Ok(Precision { digits })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Binary working precision, including guard bits.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
    }

    /// `10^-digits`: the accuracy the caller asked for.
    pub fn tolerance(&self) -> f64 {
        10f64.powi(-(self.digits as i32))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision { digits: 50 }
    }
}

/// How much an error bound can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Derived from a proven truncation estimate plus rounding accounting.
    Rigorous,
    /// Estimated from the spread of successive extrapolants; not a proof.
    Heuristic,
}

/// A real number at fixed binary precision with an error bound.
#[derive(Debug, Clone)]
pub struct HighPrecisionReal {
    pub(crate) value: Fixed,
    error_bound: f64,
    kind: BoundKind,
}

impl HighPrecisionReal {
    pub(crate) fn new(value: Fixed, error_bound: f64, kind: BoundKind) -> Self {
        HighPrecisionReal { value, error_bound, kind }
    }

    /// An exactly known rational, rounded to `precision`.
    pub fn from_rational(q: &ExactRational, precision: Precision) -> Self {
        let bits = precision.bits();
        Self::new(Fixed::from_rational(q, bits), ulp(bits), BoundKind::Rigorous)
    }

    pub(crate) fn zero(bits: u32) -> Self {
        Self::new(Fixed::zero(bits), 0.0, BoundKind::Rigorous)
    }

    /// Parses a decimal string, treating it as correct to its last digit.
    pub fn parse(text: &str, precision: Precision) -> Option<Self> {
        let bits = precision.bits();
        let places = text.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
        let value = Fixed::parse_decimal(text.trim(), bits)?;
        Some(Self::new(value, 0.5 * 10f64.powi(-places) + ulp(bits), BoundKind::Rigorous))
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Upper bound on `|stored − true|`.
    pub fn error_bound(&self) -> f64 {
        self.error_bound
    }

    pub fn bound_kind(&self) -> BoundKind {
        self.kind
    }

    pub fn is_rigorous(&self) -> bool {
        self.kind == BoundKind::Rigorous
    }

    /// Decimal digits the error bound actually supports.
    pub fn correct_digits(&self) -> u32 {
        if self.error_bound <= 0.0 {
            return (f64::from(self.value.bits) * std::f64::consts::LOG10_2) as u32;
        }
        (-self.error_bound.log10()).floor().max(0.0) as u32
    }

    /// Decimal expansion with `places` digits after the point.
    pub fn to_decimal(&self, places: u32) -> String {
        self.value.to_decimal(places)
    }

    /// Both mantissas at the finer of the two precisions.
    fn aligned(&self, other: &Self) -> (Fixed, Fixed) {
        let bits = self.value.bits.max(other.value.bits);
        (self.value.with_bits(bits), other.value.with_bits(bits))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self::new(&a + &b, self.error_bound + other.error_bound, self.kind.min(other.kind))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self::new(&a - &b, self.error_bound + other.error_bound, self.kind.min(other.kind))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.value, self.error_bound, self.kind)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (self.to_f64().abs(), other.to_f64().abs());
        let err = a * other.error_bound + b * self.error_bound + self.error_bound * other.error_bound;
        let (x, y) = self.aligned(other);
        let bits = x.bits;
        Self::new(&x * &y, err + ulp(bits), self.kind.min(other.kind))
    }

    pub fn mul_rational(&self, q: &ExactRational) -> Self {
        let scale = num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::INFINITY).abs();
        Self::new(self.value.mul_rational(q), self.error_bound * scale + ulp(self.value.bits), self.kind)
    }

    /// Quotient; errors when `other` is not bounded away from zero.
    pub fn div(&self, other: &Self) -> crate::Result<Self> {
        let d = other.to_f64().abs();
        crate::error::ensure!(d > other.error_bound, InvalidArgument, "division by a value indistinguishable from zero");
        let a = self.to_f64().abs();
        let err = (self.error_bound + a * other.error_bound / d) / (d - other.error_bound);
        let (x, y) = self.aligned(other);
        let bits = x.bits;
        Ok(Self::new(x.div(&y), err + ulp(bits), self.kind.min(other.kind)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(Fixed::one(self.value.bits), 0.0, BoundKind::Rigorous), |acc, _| acc.mul(self))
    }

    /// Loosens the bound to at least `extra` and marks it heuristic.
    pub(crate) fn heuristic(mut self, extra: f64) -> Self {
        self.error_bound = self.error_bound.max(extra);
        self.kind = BoundKind::Heuristic;
        self
    }
}

impl PartialOrd for BoundKind {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundKind {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let rank = |k: &BoundKind| matches!(k, BoundKind::Rigorous) as u8;
        rank(self).cmp(&rank(other))
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().map_or_else(|| self.correct_digits().max(1), |p| p as u32);
        f.write_str(&self.to_decimal(places))
    }
}

/// A complex number as a pair of [`HighPrecisionReal`]s.
#[derive(Debug, Clone)]
pub struct HighPrecisionComplex {
    pub re: HighPrecisionReal,
    pub im: HighPrecisionReal,
}

impl HighPrecisionComplex {
    pub fn new(re: HighPrecisionReal, im: HighPrecisionReal) -> Self {
        HighPrecisionComplex { re, im }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }

    pub fn scale(&self, q: &ExactRational) -> Self {
        Self::new(self.re.mul_rational(q), self.im.mul_rational(q))
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        Self::new(self.im.neg(), self.re.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_rigorous(&self) -> bool {
        self.re.is_rigorous() && self.im.is_rigorous()
    }

    pub fn error_bound(&self) -> f64 {
        self.re.error_bound().max(self.im.error_bound())
    }
}

impl fmt::Display for HighPrecisionComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = self.im.to_string();
        match im.strip_prefix('-') {
            Some(abs) => write!(f, "{} - {}i", self.re, abs),
            None => write!(f, "{} + {}i", self.re, im),
        }
    }
}

pub(crate) fn ulp(bits: u32) -> f64 {
    2f64.powi(-(bits as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn precision_bounds() {
        assert!(Precision::new(0).is_err());
        assert!(Precision::new(MAX_DIGITS + 1).is_err());
        let p = Precision::new(30).unwrap();
        assert!(p.bits() >= 100 + GUARD_BITS);
        assert_eq!(Precision::default().digits(), 50);
    }

    #[test]
    fn bounds_propagate() {
        let p = Precision::new(20).unwrap();
        let third = HighPrecisionReal::from_rational(&rat(1, 3), p);
        let x = third.mul(&third).add(&third);
        assert!((x.to_f64() - 4.0 / 9.0).abs() < 1e-16);
        assert!(x.error_bound() < 1e-20);
        assert!(x.is_rigorous());
        let h = x.clone().heuristic(1e-10);
        assert!(!h.add(&x).is_rigorous());
        assert_eq!(h.correct_digits(), 10);
    }

    #[test]
    fn parse_and_print() {
        let p = Precision::new(25).unwrap();
        let x = HighPrecisionReal::parse("0.91596559417721901505460351493", p).unwrap();
        assert_eq!(format!("{x:.12}"), "0.915965594177");
        assert!(HighPrecisionReal::parse("x", p).is_none());
    }
}
