//! Single and double polylogarithms at the fourth roots of unity.

use std::fmt;
use std::str::FromStr;

use super::constants::{
    dirichlet_eta, dirichlet_l_chi4, dirichlet_l_chi4_by_series, zeta, zeta_by_series,
};
use super::fixed::Fixed;
use super::series::richardson;
use super::value::{ulp, BoundKind, HighPrecisionComplex, HighPrecisionReal, Precision};
use crate::error::{ensure, Error, Result};
use crate::exact::{pow2, ExactRational};

/// A point of `{1, i, −1, −i}`, stored as the exponent of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitPoint {
    One,
    I,
    MinusOne,
    MinusI,
}

impl UnitPoint {
    pub const ALL: [UnitPoint; 4] = [UnitPoint::One, UnitPoint::I, UnitPoint::MinusOne, UnitPoint::MinusI];

    fn exponent(self) -> u32 {
        match self {
            UnitPoint::One => 0,
            UnitPoint::I => 1,
            UnitPoint::MinusOne => 2,
            UnitPoint::MinusI => 3,
        }
    }

    fn from_exponent(e: u64) -> Self {
        Self::ALL[(e % 4) as usize]
    }

    pub fn pow(self, k: u64) -> Self {
        Self::from_exponent(u64::from(self.exponent()) * (k % 4))
    }

    pub fn mul(self, other: Self) -> Self {
        Self::from_exponent(u64::from(self.exponent() + other.exponent()))
    }

    pub fn neg(self) -> Self {
        self.mul(UnitPoint::MinusOne)
    }

    pub fn is_real(self) -> bool {
        matches!(self, UnitPoint::One | UnitPoint::MinusOne)
    }

    /// `±1` as a sign, for real points.
    pub fn sign(self) -> Option<i32> {
        match self {
            UnitPoint::One => Some(1),
            UnitPoint::MinusOne => Some(-1),
            _ => None,
        }
    }

    pub fn to_complex(self) -> (f64, f64) {
        match self {
            UnitPoint::One => (1.0, 0.0),
            UnitPoint::I => (0.0, 1.0),
            UnitPoint::MinusOne => (-1.0, 0.0),
            UnitPoint::MinusI => (0.0, -1.0),
        }
    }
}

impl fmt::Display for UnitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitPoint::One => "1",
            UnitPoint::I => "i",
            UnitPoint::MinusOne => "-1",
            UnitPoint::MinusI => "-i",
        })
    }
}

impl FromStr for UnitPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(UnitPoint::One),
            "i" => Ok(UnitPoint::I),
            "-1" => Ok(UnitPoint::MinusOne),
            "-i" => Ok(UnitPoint::MinusI),
            other => Err(Error::InvalidArgument(format!("not a fourth root of unity: {other}"))),
        }
    }
}

/// A complex fixed-point value, used inside the summation loops.
#[derive(Clone, Debug)]
struct CFixed {
    re: Fixed,
    im: Fixed,
}

impl CFixed {
    fn zero(bits: u32) -> Self {
        CFixed { re: Fixed::zero(bits), im: Fixed::zero(bits) }
    }

    /// `self · u` for a unit point `u`; exact.
    fn rotate(&self, u: UnitPoint) -> Self {
        let (re, im) = (&self.re, &self.im);
        match u {
            UnitPoint::One => self.clone(),
            UnitPoint::I => CFixed { re: -im, im: re.clone() },
            UnitPoint::MinusOne => CFixed { re: -re, im: -im },
            UnitPoint::MinusI => CFixed { re: im.clone(), im: -re },
        }
    }

    fn add(&self, other: &Self) -> Self {
        CFixed { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    fn sub(&self, other: &Self) -> Self {
        CFixed { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    fn div_int(&self, k: u64) -> Self {
        CFixed { re: self.re.div_int(k), im: self.im.div_int(k) }
    }

    fn real(x: Fixed) -> Self {
        let bits = x.bits;
        CFixed { re: x, im: Fixed::zero(bits) }
    }
}

fn real_only(re: HighPrecisionReal, bits: u32) -> HighPrecisionComplex {
    HighPrecisionComplex::new(re, HighPrecisionReal::zero(bits))
}

/// `Li_k(x) = Σ_{n≥1} xⁿ/nᵏ` at a fourth root of unity, via
/// `Li_k(1) = ζ(k)`, `Li_k(−1) = −η(k)` and
/// `Li_k(±i) = −2^{−k} η(k) ± i L(χ₋₄, k)`.
///
/// ```
/// use mahler_measure::special::{li_single, Precision, UnitPoint};
/// let v = li_single(2, UnitPoint::I, Precision::new(20).unwrap()).unwrap();
/// assert!((v.re.to_f64() + std::f64::consts::PI.powi(2) / 48.0).abs() < 1e-15);
/// assert!((v.im.to_f64() - 0.915965594177219).abs() < 1e-15);
/// ```
pub fn li_single(k: u32, point: UnitPoint, precision: Precision) -> Result<HighPrecisionComplex> {
    li_single_with(k, point, precision, false)
}

/// Same as [`li_single`] but every part is summed directly from its
/// alternating series, without the Bernoulli and Euler formulas.
pub fn li_single_by_series(k: u32, point: UnitPoint, precision: Precision) -> Result<HighPrecisionComplex> {
    li_single_with(k, point, precision, true)
}

fn li_single_with(k: u32, point: UnitPoint, precision: Precision, series: bool) -> Result<HighPrecisionComplex> {
    ensure!(k >= 1, InvalidArgument, "Li_k needs k >= 1, got {k}");
    let bits = precision.bits();
    let eta = || -> Result<HighPrecisionReal> {
        if k == 1 || series {
            dirichlet_eta(k, precision)
        } else {
            // η(k) = (1 − 2^{1−k}) ζ(k)
            Ok(zeta(k, precision)?.mul_rational(&(ExactRational::from_integer(1.into()) - pow2(1 - i64::from(k)))))
        }
    };
    Ok(match point {
        UnitPoint::One => {
            ensure!(k >= 2, Divergent, "Li_1(1) diverges");
            let z = if series { zeta_by_series(k, precision)? } else { zeta(k, precision)? };
            real_only(z, bits)
        }
        UnitPoint::MinusOne => real_only(eta()?.neg(), bits),
        UnitPoint::I | UnitPoint::MinusI => {
            let re = eta()?.mul_rational(&-pow2(-i64::from(k)));
            let l = if series { dirichlet_l_chi4_by_series(k, precision)? } else { dirichlet_l_chi4(k, precision)? };
            let im = if point == UnitPoint::I { l } else { l.neg() };
            HighPrecisionComplex::new(re, im)
        }
    })
}

/// Extra bits carried through the double sums to absorb rounding and the
/// growth of Richardson weights.
const DOUBLE_GUARD: u32 = 32;
const FIRST_CHECKPOINT: u64 = 8;
const MIN_LEVELS: usize = 5;
const MAX_LEVELS: usize = 15;

/// `Li_{r,s}(x₁, x₂) = Σ_{0<k₁<k₂} x₁^{k₁} x₂^{k₂} / (k₁ʳ k₂ˢ)` at fourth
/// roots of unity.
///
/// The sum is taken over `k₁` on the outside, with the inner tail
/// `Σ_{k₂>k₁} x₂^{k₂}/k₂ˢ = Li_s(x₂) − Σ_{k₂≤k₁} x₂^{k₂}/k₂ˢ` updated
/// incrementally. Partial sums at `8·2ʲ` terms (a multiple of the period 4)
/// are Richardson-extrapolated. The error bound is the spread of the last
/// two extrapolants and is reported as heuristic.
pub fn multiple_polylog(
    r: u32,
    s: u32,
    x1: UnitPoint,
    x2: UnitPoint,
    precision: Precision,
) -> Result<HighPrecisionComplex> {
    ensure!(r >= 1 && s >= 1, InvalidArgument, "Li_{{r,s}} needs r, s >= 1, got ({r}, {s})");
    ensure!(
        !(s == 1 && x2 == UnitPoint::One),
        Divergent,
        "Li_{{{r},1}}(x, 1) diverges"
    );
    let bits = precision.bits() + DOUBLE_GUARD;
    let work = Precision::new((precision.digits() + 10).min(super::value::MAX_DIGITS))?;
    let tail_start = li_single(s, x2, work)?;
    let mut tail = CFixed { re: tail_start.re.value.with_bits(bits), im: tail_start.im.value.with_bits(bits) };
    let mut acc = CFixed::zero(bits);
    let mut k = 0u64;
    let (mut re_parts, mut im_parts) = (Vec::new(), Vec::new());
    let target = 0.1 * precision.tolerance();
    let mut estimate = (acc.clone(), f64::INFINITY, f64::INFINITY);
    for level in 0..MAX_LEVELS {
        let n = FIRST_CHECKPOINT << level;
        while k < n {
            k += 1;
            let inner = CFixed::real(Fixed::recip_pow(k, s, bits)).rotate(x2.pow(k));
            tail = tail.sub(&inner);
            let mut term = tail.rotate(x1.pow(k));
            for _ in 0..r {
                term = term.div_int(k);
            }
            acc = acc.add(&term);
        }
        re_parts.push(acc.re.clone());
        im_parts.push(acc.im.clone());
        if level + 1 >= MIN_LEVELS {
            let (re, re_spread) = richardson(&re_parts);
            let (im, im_spread) = richardson(&im_parts);
            estimate = (CFixed { re, im }, re_spread, im_spread);
            if re_spread.max(im_spread) < target {
                break;
            }
        }
    }
    let (value, re_spread, im_spread) = estimate;
    let out_bits = precision.bits();
    let base = tail_start.error_bound() + ulp(out_bits);
    let wrap = |x: Fixed, spread: f64| {
        HighPrecisionReal::new(x.with_bits(out_bits), base, BoundKind::Heuristic).heuristic(spread + base)
    };
    Ok(HighPrecisionComplex::new(wrap(value.re, re_spread), wrap(value.im, im_spread)))
}

/// `𝓛_r(α) = Li_r(α) − Li_r(−α)`.
pub fn script_l_single(r: u32, alpha: UnitPoint, precision: Precision) -> Result<HighPrecisionComplex> {
    ensure!(
        r >= 2 || !alpha.is_real(),
        Divergent,
        "script L_1 is only defined at ±i"
    );
    Ok(li_single(r, alpha, precision)?.sub(&li_single(r, alpha.neg(), precision)?))
}

/// `𝓛_{r,s}(α, α) = 2 (Li_{r,s}(α,α) − Li_{r,s}(−α,α) + Li_{r,s}(α,−α) − Li_{r,s}(−α,−α))`.
pub fn script_l_double(r: u32, s: u32, alpha: UnitPoint, precision: Precision) -> Result<HighPrecisionComplex> {
    let neg = alpha.neg();
    let li = |a, b| multiple_polylog(r, s, a, b, precision);
    let sum = li(alpha, alpha)?
        .sub(&li(neg, alpha)?)
        .add(&li(alpha, neg)?)
        .sub(&li(neg, neg)?);
    Ok(sum.scale(&ExactRational::from_integer(2.into())))
}

/// Plain partial sum of the double series over `k₂ ≤ n`, without any
/// acceleration; used as a slow but independent cross-check.
pub fn multiple_polylog_partial_sum(r: u32, s: u32, x1: UnitPoint, x2: UnitPoint, n: u64) -> (f64, f64) {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    let (mut inner_re, mut inner_im) = (0.0f64, 0.0f64);
    for k2 in 1..=n {
        let (wr, wi) = x2.pow(k2).to_complex();
        let scale = (k2 as f64).powi(-(s as i32));
        re += (wr * inner_re - wi * inner_im) * scale;
        im += (wr * inner_im + wi * inner_re) * scale;
        let (ur, ui) = x1.pow(k2).to_complex();
        let w = (k2 as f64).powi(-(r as i32));
        inner_re += ur * w;
        inner_im += ui * w;
    }
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::special::constants::{pi, rational_times_pi_power};

    fn p(d: u32) -> Precision {
        Precision::new(d).unwrap()
    }

    #[test]
    fn unit_point_algebra() {
        assert_eq!(UnitPoint::I.pow(2), UnitPoint::MinusOne);
        assert_eq!(UnitPoint::MinusI.pow(3), UnitPoint::I);
        assert_eq!(UnitPoint::I.neg(), UnitPoint::MinusI);
        assert_eq!(UnitPoint::I.pow(0), UnitPoint::One);
        for u in UnitPoint::ALL {
            assert_eq!(u.to_string().parse::<UnitPoint>().unwrap(), u);
        }
        assert!("2".parse::<UnitPoint>().is_err());
    }

    #[test]
    fn single_values() {
        let prec = p(40);
        let z3 = zeta(3, prec).unwrap();
        assert!(li_single(3, UnitPoint::One, prec).unwrap().re.sub(&z3).to_f64().abs() < 1e-38);
        let v = li_single(2, UnitPoint::MinusOne, prec).unwrap();
        let expected = rational_times_pi_power(&rat(-1, 12), 2, prec);
        assert!(v.re.sub(&expected).to_f64().abs() < 1e-38);
        let v = li_single(2, UnitPoint::I, prec).unwrap();
        let catalan = dirichlet_l_chi4(2, prec).unwrap();
        let re = rational_times_pi_power(&rat(-1, 48), 2, prec);
        assert!(v.re.sub(&re).to_f64().abs() < 1e-38);
        assert!(v.im.sub(&catalan).to_f64().abs() < 1e-38);
        let v = li_single(1, UnitPoint::MinusI, prec).unwrap();
        assert!((v.im.to_f64() + std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!(li_single(1, UnitPoint::One, prec).is_err());
    }

    // Li_k(i) + Li_k(−i) keeps only the even powers: 2^{1−k} Li_k(−1).
    #[test]
    fn series_rearrangement_consistency() {
        let prec = p(40);
        for k in 1..=8 {
            let lhs = li_single_by_series(k, UnitPoint::I, prec)
                .unwrap()
                .add(&li_single_by_series(k, UnitPoint::MinusI, prec).unwrap());
            let rhs = li_single(k, UnitPoint::MinusOne, prec).unwrap().scale(&pow2(1 - i64::from(k)));
            assert!(lhs.re.sub(&rhs.re).to_f64().abs() < 1e-36, "k = {k}");
            assert!(lhs.im.to_f64().abs() < 1e-36, "k = {k}");
        }
    }

    #[test]
    fn script_l_single_values() {
        let prec = p(30);
        let v = script_l_single(3, UnitPoint::One, prec).unwrap();
        let z3 = zeta(3, prec).unwrap().mul_rational(&rat(7, 4));
        assert!(v.re.sub(&z3).to_f64().abs() < 1e-28);
        let v = script_l_single(2, UnitPoint::I, prec).unwrap();
        let catalan = dirichlet_l_chi4(2, prec).unwrap().mul_rational(&rat(2, 1));
        assert!(v.re.to_f64().abs() < 1e-28);
        assert!(v.im.sub(&catalan).to_f64().abs() < 1e-28);
        let v = script_l_single(4, UnitPoint::One, prec).unwrap();
        let z4 = zeta(4, prec).unwrap().mul_rational(&rat(15, 8));
        assert!(v.re.sub(&z4).to_f64().abs() < 1e-28);
        assert!(script_l_single(1, UnitPoint::One, prec).is_err());
        let _ = pi(prec);
    }

    #[test]
    fn double_polylog_matches_reference_value() {
        // Σ_{k1<k2} 1/(k1³ k2²), the convention with the larger index outside
        let v = multiple_polylog(3, 2, UnitPoint::One, UnitPoint::One, p(30)).unwrap();
        assert!(!v.is_rigorous());
        let reference = HighPrecisionReal::parse("0.71156619755057243209697380608640", p(30)).unwrap();
        assert!(v.re.sub(&reference).to_f64().abs() < 1e-25, "{}", v.re);
        assert!(v.im.to_f64().abs() < 1e-25);
    }

    #[test]
    fn double_polylog_matches_plain_partial_sums() {
        let v = multiple_polylog(2, 3, UnitPoint::I, UnitPoint::MinusOne, p(20)).unwrap();
        let (re, im) = multiple_polylog_partial_sum(2, 3, UnitPoint::I, UnitPoint::MinusOne, 400_000);
        assert!((v.re.to_f64() - re).abs() < 1e-10);
        assert!((v.im.to_f64() - im).abs() < 1e-10);
    }

    #[test]
    fn divergent_parameters_are_rejected() {
        assert!(matches!(
            multiple_polylog(2, 1, UnitPoint::I, UnitPoint::One, p(10)),
            Err(Error::Divergent(_))
        ));
        assert!(multiple_polylog(0, 2, UnitPoint::I, UnitPoint::One, p(10)).is_err());
    }

    #[test]
    fn script_l_3_1_at_i_is_imaginary() {
        let v = script_l_double(3, 1, UnitPoint::I, p(30)).unwrap().times_i();
        let reference = HighPrecisionReal::parse("2.827116561355353847981681309648135328", p(30)).unwrap();
        assert!(v.re.sub(&reference).to_f64().abs() < 1e-20, "{}", v.re);
        assert!(v.im.to_f64().abs() < 1e-20);
    }
}
