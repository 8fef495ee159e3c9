//! Exact reductions of polylogarithm values and log-moment integrals to the
//! constant basis.

use num_traits::{One, Zero};

use super::combination::{ConstantBasisElement, ZetaCombination};
use super::polylog::UnitPoint;
use crate::error::{ensure, Result};
use crate::exact::{bernoulli, binomial, euler_number, factorial, int, pow2, sign_pow, ExactRational};

fn q(n: impl Into<num_bigint::BigInt>) -> ExactRational {
    int(n)
}

fn zeta_term(coeff: ExactRational, s: u32) -> ZetaCombination {
    ZetaCombination::term(coeff, ConstantBasisElement::zeta(s))
}

/// `Li_k(±1)` as a combination: `ζ(k)` at 1 and `−(1 − 2^{1−k}) ζ(k)` at
/// −1, with `Li_1(−1) = −log 2`.
///
/// `Li_1(1)` diverges; with `regularize` it is given the value 0 (the
/// constant term of `Li_1(x) = −log(1−x)` after removing the logarithmic
/// singularity), which is what the double-polylog reduction needs when its
/// first index is 1.
pub fn li_at_sign(k: u32, point: UnitPoint, regularize: bool) -> Result<ZetaCombination> {
    ensure!(point.is_real(), InvalidArgument, "Li_k reduces exactly only at ±1, got {point}");
    ensure!(k >= 1, InvalidArgument, "Li_k needs k >= 1");
    Ok(match (k, point) {
        (1, UnitPoint::One) => {
            ensure!(regularize, Divergent, "Li_1(1) diverges");
            ZetaCombination::new()
        }
        (1, _) => ZetaCombination::term(-ExactRational::one(), ConstantBasisElement::log2()),
        (_, UnitPoint::One) => zeta_term(ExactRational::one(), k),
        _ => zeta_term(pow2(1 - i64::from(k)) - ExactRational::one(), k),
    })
}

/// Exact value of `Li_{r,s}(ρ, σ)` for `ρ, σ ∈ {±1}` and `r + s` odd, by the
/// Borwein–Bradley–Broadhurst parity formula
///
/// ```text
/// Li_{r,s}(ρ,σ) = ½(−Li_{r+s}(ρσ) + (1 + (−1)ˢ) Li_r(ρ) Li_s(σ))
///               + ((−1)ˢ/2)(C(r+s−1, r−1) Li_{r+s}(ρ) + C(r+s−1, s−1) Li_{r+s}(σ))
///               − Σ_{0<k<(r+s)/2} (−1)ˢ Li_{2k}(ρσ)
///                   (C(r+s−2k−1, r−1) Li_{r+s−2k}(ρ) + C(r+s−2k−1, s−1) Li_{r+s−2k}(σ))
/// ```
///
/// `r = 1` is accepted with `Li_1(1)` regularized to 0; the formula stays
/// valid in that case. Every product that appears pairs an even weight (a
/// power of `π`) with an odd one, so the result stays in the basis.
///
/// ```
/// use mahler_measure::special::{reduce_double_polylog, UnitPoint};
/// let v = reduce_double_polylog(2, 1, UnitPoint::One, UnitPoint::MinusOne).unwrap();
/// assert_eq!(v.to_string(), "-1/4·ζ(3) + 1/12·π^2·log 2");
/// ```
pub fn reduce_double_polylog(r: u32, s: u32, rho: UnitPoint, sigma: UnitPoint) -> Result<ZetaCombination> {
    ensure!((r + s) % 2 == 1, InvalidArgument, "the parity reduction needs r + s odd, got {}", r + s);
    ensure!(r >= 1 && s >= 1, InvalidArgument, "need r, s >= 1");
    ensure!(rho.is_real() && sigma.is_real(), InvalidArgument, "arguments must be ±1");
    ensure!(!(s == 1 && sigma == UnitPoint::One), Divergent, "Li_{{{r},1}}(ρ, 1) diverges");
    let w = r + s;
    let li = |k: u32, x: UnitPoint| li_at_sign(k, x, true);
    let rs = rho.mul(sigma);
    let half = ExactRational::new(1.into(), 2.into());
    let sign_s = sign_pow(s.into());
    let binom = |n: u32, k: u32| -> ExactRational {
        if k > n {
            ExactRational::zero()
        } else {
            q(binomial(n.into(), k.into()))
        }
    };

    let mut out = li(w, rs)?.scale(&-half.clone());
    if s % 2 == 0 {
        out = &out + &li(r, rho)?.mul(&li(s, sigma)?)?;
    }
    let ends = &li(w, rho)?.scale(&binom(w - 1, r - 1)) + &li(w, sigma)?.scale(&binom(w - 1, s - 1));
    out = &out + &ends.scale(&(&sign_s * &half));
    for k in (1..).take_while(|k| 2 * k < w) {
        let m = w - 2 * k;
        let mut inner = ZetaCombination::new();
        let (cr, cs) = (binom(m - 1, r - 1), binom(m - 1, s - 1));
        if !cr.is_zero() {
            inner = &inner + &li(m, rho)?.scale(&cr);
        }
        if !cs.is_zero() {
            inner = &inner + &li(m, sigma)?.scale(&cs);
        }
        out = &out - &li(2 * k, rs)?.mul(&inner)?.scale(&sign_s);
    }
    Ok(out)
}

/// `𝓛_{r,s}(1,1) = 2 Σ ± Li_{r,s}(±1, ±1)` assembled from
/// [`reduce_double_polylog`].
pub fn script_l_double_reduced(r: u32, s: u32) -> Result<ZetaCombination> {
    use UnitPoint::{MinusOne as M, One as P};
    let f = |a, b| reduce_double_polylog(r, s, a, b);
    let sum = &(&(&f(P, P)? - &f(M, P)?) + &f(P, M)?) - &f(M, M)?;
    Ok(sum.scale(&q(2)))
}

/// Closed form of `𝓛_{3,2h}(1,1)` in the basis of odd zeta values times
/// powers of `π`:
///
/// ```text
/// h = 1:  93/4 ζ(5) − 7/4 π² ζ(3)
/// h ≥ 2:  (2^{2h+3}−1)/2^{2h+1} (h+1)(2h+1) ζ(2h+3)
///         − (2^{2h+1}−1)/2^{2h} h(2h+5) ζ(2) ζ(2h+1)
///         − Σ_{k=2}^{h−1} C(2h−2k+2, 2) (2^{2h−2k+3}−1)/2^{2h} ζ(2k) ζ(2h−2k+3)
/// ```
pub fn script_l_3_even_closed(h: u32) -> Result<ZetaCombination> {
    ensure!(h >= 1, OutOfRange, "need h >= 1");
    if h == 1 {
        return Ok(zeta_term(ExactRational::new(93.into(), 4.into()), 5)
            + ZetaCombination::term(ExactRational::new((-7).into(), 4.into()), ConstantBasisElement::zeta(3).times_pi(2)));
    }
    let (h_, h2) = (i64::from(h), 2 * i64::from(h));
    let mut out = zeta_term(
        (pow2(h2 + 3) - q(1)) / pow2(h2 + 1) * q((h_ + 1) * (2 * h_ + 1)),
        2 * h + 3,
    );
    let z2 = ZetaCombination::term(q(1), ConstantBasisElement::zeta(2));
    let second = z2.mul(&zeta_term((pow2(h2 + 1) - q(1)) / pow2(h2) * q(h_ * (2 * h_ + 5)), 2 * h + 1))?;
    out = &out - &second;
    for k in 2..h {
        let k_ = i64::from(k);
        let c = q(binomial(u64::from(2 * h - 2 * k + 2), 2)) * (pow2(h2 - 2 * k_ + 3) - q(1)) / pow2(h2);
        let even = ZetaCombination::term(q(1), ConstantBasisElement::zeta(2 * k));
        out = &out - &even.mul(&zeta_term(c, 2 * h - 2 * k + 3))?;
    }
    Ok(out)
}

/// `Li_{1,2h}(−1,1) − Li_{1,2h}(1,−1)`:
///
/// ```text
/// (2h−1)(2^{2h+1}−1)/2^{2h+1} ζ(2h+1) − log 2 (2^{2h}−1)/2^{2h−1} ζ(2h)
///   − Σ_{k=1}^{h−1} (2^{2h+1−2k}−1)(2^{2k−1}−1)/2^{2h−1} ζ(2k) ζ(2h+1−2k)
/// ```
pub fn li1_difference_closed(h: u32) -> Result<ZetaCombination> {
    ensure!(h >= 1, OutOfRange, "need h >= 1");
    let h2 = 2 * i64::from(h);
    let mut out = zeta_term(q(h2 - 1) * (pow2(h2 + 1) - q(1)) / pow2(h2 + 1), 2 * h + 1);
    let log_term = ZetaCombination::term(q(1), ConstantBasisElement::zeta(2 * h))
        .mul(&ZetaCombination::term((pow2(h2) - q(1)) / pow2(h2 - 1), ConstantBasisElement::log2()))?;
    out = &out - &log_term;
    for k in 1..h {
        let k2 = 2 * i64::from(k);
        let c = (pow2(h2 + 1 - k2) - q(1)) * (pow2(k2 - 1) - q(1)) / pow2(h2 - 1);
        let even = ZetaCombination::term(q(1), ConstantBasisElement::zeta(2 * k));
        out = &out - &even.mul(&zeta_term(c, 2 * h + 1 - 2 * k))?;
    }
    Ok(out)
}

/// `∫₀¹ log(1+x) log^{2h−1}x dx/(x²−1)`, written with Bernoulli numbers:
///
/// ```text
/// −(2h−1)! (2h−1)(2^{2h+1}−1)/2^{2h+2} ζ(2h+1)
///   + (−1)^{h−1} log 2 (2^{2h}−1) B_{2h} π^{2h} / (4h)
///   + (2h−1)!/2 Σ_{k=1}^{h−1} (2^{2h+1−2k}−1)(2^{2k−1}−1)/2^{2h−2k} (−1)^{k−1} B_{2k}/(2k)! π^{2k} ζ(2h+1−2k)
/// ```
///
/// It equals `−(2h−1)!/2` times [`li1_difference_closed`].
pub fn li1_log_integral_closed(h: u32) -> Result<ZetaCombination> {
    ensure!(h >= 1, OutOfRange, "need h >= 1");
    let (h_, h2) = (i64::from(h), 2 * i64::from(h));
    let fact = q(factorial(2 * u64::from(h) - 1));
    let mut out = zeta_term(-&fact * q(h2 - 1) * (pow2(h2 + 1) - q(1)) / pow2(h2 + 2), 2 * h + 1);
    out.add_term(
        sign_pow(h_ - 1) * (pow2(h2) - q(1)) * bernoulli(2 * h) / q(4 * h_),
        ConstantBasisElement::log2().times_pi(2 * h),
    );
    for k in 1..h {
        let k2 = 2 * i64::from(k);
        let c = &fact / q(2) * (pow2(h2 + 1 - k2) - q(1)) * (pow2(k2 - 1) - q(1)) / pow2(h2 - k2)
            * sign_pow(i64::from(k) - 1)
            * bernoulli(2 * k)
            / q(factorial(2 * u64::from(k)));
        out.add_term(c, ConstantBasisElement::zeta(2 * h + 1 - 2 * k).times_pi(2 * k));
    }
    Ok(out)
}

/// `∫₀^∞ log(1+x²) log^{2h}x dx/(x²+1)`:
///
/// ```text
/// (−1)ʰ 2 E_{2h} (π/2)^{2h+1} log 2
///   + 2 Σ_{l=1}^{h} (2h)!/(2h−2l)! (1 − 2^{−2l−1}) (−1)^{h−l} E_{2h−2l} (π/2)^{2h−2l+1} ζ(2l+1)
/// ```
pub fn log1p_square_moment_closed(h: u32) -> ZetaCombination {
    let (h_, h2) = (i64::from(h), 2 * i64::from(h));
    let mut out = ZetaCombination::term(
        sign_pow(h_) * q(2) * q(euler_number(2 * h)) / pow2(h2 + 1),
        ConstantBasisElement::log2().times_pi(2 * h + 1),
    );
    for l in 1..=h {
        let l2 = 2 * i64::from(l);
        let c = q(2) * q(factorial(2 * u64::from(h))) / q(factorial(2 * u64::from(h - l)))
            * (q(1) - pow2(-l2 - 1))
            * sign_pow(h_ - i64::from(l))
            * q(euler_number(2 * (h - l)))
            / pow2(h2 - l2 + 1);
        out.add_term(c, ConstantBasisElement::zeta(2 * l + 1).times_pi(2 * (h - l) + 1));
    }
    out
}

/// `∫₀^∞ Ti₂(x) log^{2h}x dx/(x²+1)` where `Ti₂(x) = Im Li₂(ix)`:
///
/// ```text
/// Σ_{l=0}^{h} B_{2l} (2h)!/(2l)! (2^{2l−1}−1)(−1)^{l+1} π^{2l} (h−l+1) (2^{2h+3−2l}−1)/2^{2h+1} ζ(2h+3−2l)
/// ```
pub fn ti2_moment_closed(h: u32) -> ZetaCombination {
    let (h_, h2) = (i64::from(h), 2 * i64::from(h));
    (0..=h)
        .map(|l| {
            let l_ = i64::from(l);
            let c = bernoulli(2 * l) * q(factorial(2 * u64::from(h))) / q(factorial(2 * u64::from(l)))
                * (pow2(2 * l_ - 1) - q(1))
                * sign_pow(l_ + 1)
                * q(h_ - l_ + 1)
                * (pow2(h2 + 3 - 2 * l_) - q(1))
                / pow2(h2 + 1);
            ZetaCombination::term(c, ConstantBasisElement::zeta(2 * h + 3 - 2 * l).times_pi(2 * l))
        })
        .sum()
}

/// Which denominator a log-moment integral over `[0, 1]` carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Denominator {
    /// `x² − 1`
    Minus,
    /// `x² + 1`
    Plus,
}

/// `∫₀¹ logʲx dx/(x²∓1)`:
/// `(−1)^{j+1} j! (1 − 2^{−(j+1)}) ζ(j+1)` for `x²−1` (needs `j ≥ 1`) and
/// `(−1)ʲ j! L(χ₋₄, j+1)` for `x²+1`.
pub fn log_moment_closed(j: u32, denominator: Denominator) -> Result<ZetaCombination> {
    let sign = sign_pow(j.into());
    let fact = q(factorial(j.into()));
    Ok(match denominator {
        Denominator::Minus => {
            ensure!(j >= 1, Divergent, "∫₀¹ dx/(x²−1) diverges");
            zeta_term(-sign * fact * (q(1) - pow2(-i64::from(j) - 1)), j + 1)
        }
        Denominator::Plus => ZetaCombination::term(sign * fact, ConstantBasisElement::l_chi4(j + 1)),
    })
}
