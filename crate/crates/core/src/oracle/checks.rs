//! Quadrature checks of individual integral evaluations.

use std::f64::consts::{FRAC_PI_2, PI};

use super::functions::{log_over_square_minus_one, ti2};
use super::quadrature::{integrate, integrate_half_line};
use crate::error::{ensure, Result};
use crate::exact::p_poly_recursive;
use crate::special::{
    combination_value, li1_log_integral_closed, log1p_square_moment_closed, log_moment_closed, ti2_moment_closed,
    Denominator, Precision, ZetaCombination,
};

/// A quadrature value next to the closed form it should equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub quadrature: f64,
    pub formula: f64,
    pub tolerance: f64,
    pub agree: bool,
}

impl Check {
    /// Agreement means `|quadrature − formula| ≤ tolerance · max(1, |formula|)`.
    fn new(quadrature: f64, formula: f64, tolerance: f64) -> Self {
        let agree = (quadrature - formula).abs() <= tolerance * formula.abs().max(1.0);
        Check { quadrature, formula, tolerance, agree }
    }

    pub fn difference(&self) -> f64 {
        (self.quadrature - self.formula).abs()
    }
}

const QUAD_TOL: f64 = 1e-13;

fn value_of(c: &ZetaCombination) -> Result<f64> {
    Ok(combination_value(c, Precision::new(25)?)?.to_f64())
}

/// `∫₀^∞ x logᵏx dx/((x²+a²)(x²+b²)) = (π/2)^{k+1} (P_k(2 log a/π) − P_k(2 log b/π))/(a² − b²)`,
/// within `10⁻⁹`.
pub fn kernel_integral_check(a: f64, b: f64, k: u32) -> Result<Check> {
    ensure!(a > 0.0 && b > 0.0, InvalidArgument, "need a, b > 0");
    ensure!(a != b, InvalidArgument, "the kernel formula needs a ≠ b");
    ensure!(k <= 10, OutOfRange, "k must be at most 10");
    let p = p_poly_recursive(k);
    let formula =
        FRAC_PI_2.powi(k as i32 + 1) * (p.eval_f64(2.0 * a.ln() / PI) - p.eval_f64(2.0 * b.ln() / PI)) / (a * a - b * b);
    let (a2, b2) = (a * a, b * b);
    let head = |x: f64| x * x.ln().powi(k as i32) / ((x * x + a2) * (x * x + b2));
    // x = 1/y: y⁻¹ (−log y)ᵏ y⁴ / ((1 + a² y²)(1 + b² y²)) / y² = y (−log y)ᵏ/(…)
    let tail = |y: f64| y * (-y.ln()).powi(k as i32) / ((1.0 + a2 * y * y) * (1.0 + b2 * y * y));
    let quadrature = integrate(head, 0.0, 1.0, QUAD_TOL)?.value + integrate(tail, 0.0, 1.0, QUAD_TOL)?.value;
    Ok(Check::new(quadrature, formula, 1e-9))
}

/// `∫₀^∞ x^α dx/((x²+a²)(x²+b²)) = π (a^{α−1} − b^{α−1}) / (2 cos(πα/2) (b² − a²))`
/// for `0 < α < 1`, within `10⁻⁹`.
pub fn power_kernel_check(a: f64, b: f64, alpha: f64) -> Result<Check> {
    ensure!(a > 0.0 && b > 0.0, InvalidArgument, "need a, b > 0");
    ensure!(a != b, InvalidArgument, "the formula needs a ≠ b");
    ensure!(alpha > 0.0 && alpha < 1.0, OutOfRange, "need 0 < α < 1");
    let formula = PI * (a.powf(alpha - 1.0) - b.powf(alpha - 1.0)) / (2.0 * (PI * alpha / 2.0).cos() * (b * b - a * a));
    let (a2, b2) = (a * a, b * b);
    let head = |x: f64| x.powf(alpha) / ((x * x + a2) * (x * x + b2));
    let tail = |y: f64| y.powf(2.0 - alpha) / ((1.0 + a2 * y * y) * (1.0 + b2 * y * y));
    let quadrature = integrate(head, 0.0, 1.0, QUAD_TOL)?.value + integrate(tail, 0.0, 1.0, QUAD_TOL)?.value;
    Ok(Check::new(quadrature, formula, 1e-9))
}

/// `∫₀¹ logʲx dx/(x² ∓ 1)` against its zeta or `L(χ₋₄, ·)` value, within `10⁻¹⁰`.
pub fn log_moment_check(j: u32, denominator: Denominator) -> Result<Check> {
    ensure!(j <= 8, OutOfRange, "j must be at most 8");
    let closed = value_of(&log_moment_closed(j, denominator)?)?;
    let quadrature = match denominator {
        Denominator::Minus => {
            integrate(|x: f64| x.ln().powi(j as i32 - 1) * log_over_square_minus_one(x), 0.0, 1.0, QUAD_TOL)?
        }
        Denominator::Plus => integrate(|x: f64| x.ln().powi(j as i32) / (x * x + 1.0), 0.0, 1.0, QUAD_TOL)?,
    };
    Ok(Check::new(quadrature.value, closed, 1e-10))
}

/// `∫₀¹ log(1+x) log^{2h−1}x dx/(x²−1)`, within `10⁻⁸`.
pub fn li1_log_integral_check(h: u32) -> Result<Check> {
    let closed = value_of(&li1_log_integral_closed(h)?)?;
    let j = 2 * h as i32 - 1;
    let f = |x: f64| x.ln_1p() * x.ln().powi(j - 1) * log_over_square_minus_one(x);
    Ok(Check::new(integrate(f, 0.0, 1.0, QUAD_TOL)?.value, closed, 1e-8))
}

/// `∫₀^∞ log(1+x²) log^{2h}x dx/(x²+1)`, within `10⁻⁸`.
pub fn log1p_square_moment_check(h: u32) -> Result<Check> {
    let closed = value_of(&log1p_square_moment_closed(h))?;
    let j = 2 * h as i32;
    let f = |x: f64| (x * x).ln_1p() * x.ln().powi(j) / (x * x + 1.0);
    Ok(Check::new(integrate_half_line(f, QUAD_TOL)?.value, closed, 1e-8))
}

/// `∫₀^∞ Ti₂(x) log^{2h}x dx/(x²+1)`, within `10⁻⁸`.
pub fn ti2_moment_check(h: u32) -> Result<Check> {
    let closed = value_of(&ti2_moment_closed(h))?;
    let j = 2 * h as i32;
    let f = |x: f64| ti2(x) * x.ln().powi(j) / (x * x + 1.0);
    Ok(Check::new(integrate_half_line(f, QUAD_TOL)?.value, closed, 1e-8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rayon::prelude::*;

    #[test]
    fn kernel_examples() {
        let c = kernel_integral_check(2.0, 3.0, 0).unwrap();
        assert!((c.formula - (2f64.ln() - 3f64.ln()) / (4.0 - 9.0)).abs() < 1e-15);
        assert!(c.agree);
        assert!(kernel_integral_check(1.0, 2.0, 1).unwrap().agree);
        assert!(kernel_integral_check(0.5, 5.0, 4).unwrap().agree);
        assert!(kernel_integral_check(2.0, 2.0, 1).is_err());
    }

    #[test]
    fn kernel_random_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cases: Vec<(f64, f64, u32)> =
            (0..100).map(|_| (rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0), rng.gen_range(0..=6))).collect();
        let failures: Vec<_> = cases
            .par_iter()
            .map(|&(a, b, k)| (a, b, k, kernel_integral_check(a, b, k).unwrap()))
            .filter(|(_, _, _, c)| !c.agree)
            .collect();
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn power_kernel_examples() {
        assert!(power_kernel_check(1.0, 2.0, 0.5).unwrap().agree);
        assert!(power_kernel_check(3.0, 1.0, 0.9).unwrap().agree);
        assert!(power_kernel_check(1.0, 1.0, 0.5).is_err());
        assert!(power_kernel_check(1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn length_one_moments() {
        let c = log_moment_check(1, Denominator::Minus).unwrap();
        assert!((c.formula - 0.75 * PI * PI / 6.0).abs() < 1e-14);
        assert!((log_moment_check(0, Denominator::Plus).unwrap().quadrature - PI / 4.0).abs() < 1e-13);
        for j in 0..=8 {
            assert!(log_moment_check(j, Denominator::Plus).unwrap().agree, "plus {j}");
            if j >= 1 {
                assert!(log_moment_check(j, Denominator::Minus).unwrap().agree, "minus {j}");
            }
        }
    }

    #[test]
    fn moment_integrals() {
        let li1 = [0.329236162849817068, 0.369637355069510584, 1.82975479821716976];
        let log1p = [2.17758609030360213, 11.9816313034382384, 239.862956325704615, 10079.12139618691];
        let ti2m = [2.10359958052928999945, 9.76633140887125103249, 189.701445195702855, 7926.78348290912742];
        for (h, v) in (1..).zip(li1) {
            let c = li1_log_integral_check(h).unwrap();
            assert!(c.agree && (c.formula - v).abs() < 1e-13 * v, "h = {h}: {c:?}");
        }
        for (h, (a, b)) in (0..).zip(log1p.into_iter().zip(ti2m)) {
            let c = log1p_square_moment_check(h).unwrap();
            assert!(c.agree && (c.formula - a).abs() < 1e-13 * a, "h = {h}: {c:?}");
            let c = ti2_moment_check(h).unwrap();
            assert!(c.agree && (c.formula - b).abs() < 1e-13 * b, "h = {h}: {c:?}");
        }
    }
}
