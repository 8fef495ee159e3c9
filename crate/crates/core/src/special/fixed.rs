//! Binary fixed-point reals: a big-integer mantissa `m` standing for
//! `m / 2^bits`. All values taking part in one computation share `bits`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::ExactRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Fixed {
    pub(crate) m: BigInt,
    pub(crate) bits: u32,
}

/// `round(n / d)` for `d > 0`, ties away from zero.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    let twice = r.abs() << 1u32;
    if twice >= *d {
        if n.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Fixed {
    pub(crate) fn zero(bits: u32) -> Self {
        Fixed { m: BigInt::zero(), bits }
    }

    pub(crate) fn one(bits: u32) -> Self {
        Fixed { m: BigInt::one() << bits, bits }
    }

    pub(crate) fn from_rational(q: &ExactRational, bits: u32) -> Self {
        Fixed { m: div_round(&(q.numer() << bits), q.denom()), bits }
    }

    /// `1 / k^s`, correctly rounded.
    pub(crate) fn recip_pow(k: u64, s: u32, bits: u32) -> Self {
        let den = BigInt::from(k).pow(s);
        Fixed { m: div_round(&(BigInt::one() << bits), &den), bits }
    }

    /// Parses a plain decimal string such as `-1.25` or `3`.
    pub(crate) fn parse_decimal(text: &str, bits: u32) -> Option<Self> {
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{int_part}{frac_part}0").parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32 + 1);
        let m = div_round(&(digits << bits), &scale);
        Some(Fixed { m: if neg { -m } else { m }, bits })
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub(crate) fn abs(&self) -> Self {
        Fixed { m: self.m.abs(), bits: self.bits }
    }

    pub(crate) fn mul_int(&self, n: impl Into<BigInt>) -> Self {
        Fixed { m: &self.m * n.into(), bits: self.bits }
    }

    pub(crate) fn div_int(&self, n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        let (num, den) = if n.is_negative() { (-&self.m, -n) } else { (self.m.clone(), n) };
        Fixed { m: div_round(&num, &den), bits: self.bits }
    }

    pub(crate) fn mul_rational(&self, q: &ExactRational) -> Self {
        Fixed { m: div_round(&(&self.m * q.numer()), q.denom()), bits: self.bits }
    }

    pub(crate) fn div(&self, other: &Fixed) -> Self {
        debug_assert_eq!(self.bits, other.bits);
        let (num, den) = if other.m.is_negative() {
            (-(&self.m << self.bits), -&other.m)
        } else {
            (&self.m << self.bits, other.m.clone())
        };
        Fixed { m: div_round(&num, &den), bits: self.bits }
    }

    /// Moves to a different working precision.
    pub(crate) fn with_bits(&self, bits: u32) -> Self {
        let m = if bits >= self.bits {
            &self.m << (bits - self.bits)
        } else {
            div_round(&self.m, &(BigInt::one() << (self.bits - bits)))
        };
        Fixed { m, bits }
    }

    pub(crate) fn to_f64(&self) -> f64 {
        // keep the leading 64 bits so tiny values survive the conversion
        let shift = self.m.bits().saturating_sub(64);
        let top = (&self.m >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// Decimal expansion rounded to `places` digits after the point.
    pub(crate) fn to_decimal(&self, places: u32) -> String {
        let scaled = div_round(&(&self.m * BigInt::from(10u32).pow(places)), &(BigInt::one() << self.bits));
        let neg = scaled.sign() == Sign::Minus;
        let mut digits = scaled.abs().to_string();
        let places = places as usize;
        if digits.len() <= places {
            digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
        }
        let split = digits.len() - places;
        let mut out = String::with_capacity(digits.len() + 2);
        if neg {
            out.push('-');
        }
        out.push_str(&digits[..split]);
        if places > 0 {
            out.push('.');
            out.push_str(&digits[split..]);
        }
        out
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, rhs.bits);
        Fixed { m: &self.m + &rhs.m, bits: self.bits }
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, rhs.bits);
        Fixed { m: &self.m - &rhs.m, bits: self.bits }
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, rhs: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, rhs.bits);
        let prod = &self.m * &rhs.m;
        Fixed { m: div_round(&prod, &(BigInt::one() << self.bits)), bits: self.bits }
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed { m: -&self.m, bits: self.bits }
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = (f64::from(self.bits) * std::f64::consts::LOG10_2) as u32;
        f.write_str(&self.to_decimal(places))
    }
}
