//! `π`, `log 2`, Riemann zeta values and Dirichlet L-values for the
//! character of conductor 4.
//!
//! Values that have an exact expression in Bernoulli or Euler numbers times
//! a power of `π` use it. The rest come from accelerated alternating series.

use num_bigint::BigInt;

use super::fixed::Fixed;
use super::series::alternating_sum;
use super::value::{ulp, BoundKind, HighPrecisionReal, Precision};
use crate::error::{ensure, Result};
use crate::exact::{bernoulli, euler_number, factorial, pow2, sign_pow, ExactRational};

/// `Σ_j (−1)^j / ((2j+1) k^{2j+1})` for `k > 1`, i.e. `arctan(1/k)`.
fn arctan_recip(k: u64, bits: u32) -> Fixed {
    let k2 = BigInt::from(k) * k;
    let mut power = Fixed::one(bits).div_int(k);
    let mut acc = Fixed::zero(bits);
    let mut j = 0u64;
    while !power.is_zero() {
        let term = power.div_int(2 * j + 1);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        power = power.div_int(k2.clone());
        j += 1;
    }
    acc
}

/// `artanh(1/k) = Σ_j 1 / ((2j+1) k^{2j+1})` for `k > 1`.
fn artanh_recip(k: u64, bits: u32) -> Fixed {
    let k2 = BigInt::from(k) * k;
    let mut power = Fixed::one(bits).div_int(k);
    let mut acc = Fixed::zero(bits);
    let mut j = 0u64;
    while !power.is_zero() {
        acc = &acc + &power.div_int(2 * j + 1);
        power = power.div_int(k2.clone());
        j += 1;
    }
    acc
}

const EXTRA_BITS: u32 = 16;

pub(crate) fn pi_fixed(bits: u32) -> Fixed {
    let w = bits + EXTRA_BITS;
    let v = &arctan_recip(5, w).mul_int(16) - &arctan_recip(239, w).mul_int(4);
    v.with_bits(bits)
}

pub(crate) fn log2_fixed(bits: u32) -> Fixed {
    artanh_recip(3, bits + EXTRA_BITS).mul_int(2).with_bits(bits)
}

/// `π` by Machin's formula.
pub fn pi(precision: Precision) -> HighPrecisionReal {
    let bits = precision.bits();
    HighPrecisionReal::new(pi_fixed(bits), 2.0 * ulp(bits), BoundKind::Rigorous)
}

/// `log 2 = 2 artanh(1/3)`.
pub fn log2(precision: Precision) -> HighPrecisionReal {
    let bits = precision.bits();
    HighPrecisionReal::new(log2_fixed(bits), 2.0 * ulp(bits), BoundKind::Rigorous)
}

/// `q · π^e`, the shape of every even zeta value and odd L-value.
pub fn rational_times_pi_power(q: &ExactRational, e: u32, precision: Precision) -> HighPrecisionReal {
    pi(precision).pow(e).mul_rational(q)
}

/// `ζ(2k) = (−1)^{k−1} B_{2k} (2π)^{2k} / (2 (2k)!)` as `q` in `q · π^{2k}`.
pub fn zeta_even_coefficient(k: u32) -> ExactRational {
    sign_pow(i64::from(k) - 1) * bernoulli(2 * k) * pow2(2 * i64::from(k) - 1)
        / ExactRational::from_integer(factorial(2 * u64::from(k)))
}

/// `L(χ₋₄, 2k+1) = (−1)ᵏ E_{2k} (π/2)^{2k+1} / (2 (2k)!)` as `q` in
/// `q · π^{2k+1}`.
pub fn l_chi4_odd_coefficient(k: u32) -> ExactRational {
    sign_pow(k.into()) * ExactRational::from_integer(euler_number(2 * k))
        / pow2(2 * i64::from(k) + 2)
        / ExactRational::from_integer(factorial(2 * u64::from(k)))
}

/// Dirichlet eta `η(s) = Σ_{n≥1} (−1)^{n−1}/nˢ` by accelerated summation.
fn eta_fixed(s: u32, bits: u32) -> (Fixed, f64) {
    alternating_sum(bits, |k| Fixed::recip_pow(k + 1, s, bits))
}

/// Riemann zeta at an integer `s ≥ 2`.
///
/// Even arguments use the Bernoulli-number formula; odd ones
/// `ζ(s) = η(s) / (1 − 2^{1−s})` with `η` from an accelerated alternating
/// series.
///
/// ```
/// use mahler_measure::special::{zeta, Precision};
/// let z3 = zeta(3, Precision::new(30).unwrap()).unwrap();
/// assert_eq!(z3.to_decimal(20), "1.20205690315959428540");
/// ```
pub fn zeta(s: u32, precision: Precision) -> Result<HighPrecisionReal> {
    ensure!(s >= 2, Divergent, "zeta({s}) needs s >= 2");
    if s % 2 == 0 {
        return Ok(rational_times_pi_power(&zeta_even_coefficient(s / 2), s, precision));
    }
    zeta_by_series(s, precision)
}

/// Riemann zeta at `s ≥ 2` from the alternating series for every `s`,
/// independent of the Bernoulli path.
pub fn zeta_by_series(s: u32, precision: Precision) -> Result<HighPrecisionReal> {
    ensure!(s >= 2, Divergent, "zeta({s}) needs s >= 2");
    let bits = precision.bits();
    let (eta, err) = eta_fixed(s, bits);
    // ζ = η · 2^{s−1} / (2^{s−1} − 1)
    let factor = pow2(i64::from(s) - 1) / (pow2(i64::from(s) - 1) - ExactRational::from_integer(1.into()));
    let f = num_traits::ToPrimitive::to_f64(&factor).unwrap_or(2.0);
    Ok(HighPrecisionReal::new(eta.mul_rational(&factor), err * f + ulp(bits), BoundKind::Rigorous))
}

/// `L(χ₋₄, s)` for integer `s ≥ 1`: the exact Euler-number formula for odd
/// `s`, the alternating series `Σ (−1)ᵏ/(2k+1)ˢ` for even `s`.
///
/// ```
/// use mahler_measure::special::{dirichlet_l_chi4, Precision};
/// let catalan = dirichlet_l_chi4(2, Precision::new(25).unwrap()).unwrap();
/// assert_eq!(catalan.to_decimal(20), "0.91596559417721901505");
/// ```
pub fn dirichlet_l_chi4(s: u32, precision: Precision) -> Result<HighPrecisionReal> {
    ensure!(s >= 1, Divergent, "L(chi_-4, {s}) needs s >= 1");
    if s % 2 == 1 {
        return Ok(rational_times_pi_power(&l_chi4_odd_coefficient(s / 2), s, precision));
    }
    dirichlet_l_chi4_by_series(s, precision)
}

/// `L(χ₋₄, s)` from the alternating series for every `s ≥ 1`.
pub fn dirichlet_l_chi4_by_series(s: u32, precision: Precision) -> Result<HighPrecisionReal> {
    ensure!(s >= 1, Divergent, "L(chi_-4, {s}) needs s >= 1");
    let bits = precision.bits();
    let (v, err) = alternating_sum(bits, |k| Fixed::recip_pow(2 * k + 1, s, bits));
    Ok(HighPrecisionReal::new(v, err, BoundKind::Rigorous))
}

/// `η(s)` for `s ≥ 1` (`η(1) = log 2`).
pub fn dirichlet_eta(s: u32, precision: Precision) -> Result<HighPrecisionReal> {
    ensure!(s >= 1, Divergent, "eta({s}) needs s >= 1");
    let bits = precision.bits();
    let (v, err) = eta_fixed(s, bits);
    Ok(HighPrecisionReal::new(v, err, BoundKind::Rigorous))
}
