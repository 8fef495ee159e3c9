//! The Mahler measure as a finite sum of one-dimensional log-moment
//! integrals of the base measure.
//!
//! With `N = ⌊n/2⌋`:
//!
//! ```text
//! n = 2N:    m = (2/π)ⁿ Σ_{h=1}^{N} a_{N,h−1} (π/2)^{2N−2h} ∫₀^∞ m(P_x) log^{2h−1}x dx/(x²−1)
//! n = 2N+1:  m = (2/π)ⁿ Σ_{h=0}^{N} b_{N,h}   (π/2)^{2N−2h} ∫₀^∞ m(P_x) log^{2h}x   dx/(x²+1)
//! ```
//!
//! For family III the parameter is real for even `n` and purely imaginary
//! for odd `n`; in the real case the measure depends on the sign, and both
//! signs occur with equal weight.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::base::{base_measure_i, base_measure_ii, base_measure_iii, ArgumentMode};
use super::functions::log_over_square_minus_one;
use super::quadrature::integrate_half_line;
use super::{IntegralEstimate, Method};
use crate::error::{ensure, Result};
use crate::formulas::{coeff_a, coeff_b, Family, FamilySpec};
use crate::special::Precision;

/// Largest number of transforms handled.
pub const MAX_REDUCED_TRANSFORMS: u32 = 6;

/// `m(P_x)` for the base polynomial of `spec`'s family at parameter size `x`.
fn base_measure(spec: FamilySpec, x: f64) -> f64 {
    match spec.family() {
        Family::I => base_measure_i(x),
        Family::II => base_measure_ii(x) / (PI * PI),
        Family::III if spec.is_even() => {
            0.5 * (base_measure_iii(x, ArgumentMode::Real) + base_measure_iii(-x, ArgumentMode::Real))
        }
        Family::III => base_measure_iii(x, ArgumentMode::Imaginary) / PI,
    }
}

/// Reduced-integral evaluation of `m(P)` for `spec`.
///
/// The precision sets the quadrature tolerance, floored at `10⁻¹⁴`
/// because the integrands are evaluated in double precision.
pub fn reduced_integral(spec: FamilySpec, precision: Precision) -> Result<IntegralEstimate> {
    let n = spec.n_transforms();
    ensure!(
        n <= MAX_REDUCED_TRANSFORMS,
        UnsupportedSpec,
        "reduced integrals are supported up to n = {MAX_REDUCED_TRANSFORMS}, got {n}"
    );
    if n == 0 {
        // only family II has n = 0: the base measure at |α| = 1
        let value = base_measure(spec, 1.0);
        return Ok(IntegralEstimate::new(value, f64::EPSILON * value, Method::Series, 1));
    }
    let tol = precision.tolerance().max(1e-14);
    let big_n = n / 2;
    let half_pi = PI / 2.0;
    let terms: Vec<(f64, i32, bool)> = if spec.is_even() {
        (1..=big_n)
            .map(|h| Ok((coeff_a(big_n, h - 1)?.to_f64().unwrap_or(f64::NAN), (2 * h - 1) as i32, true)))
            .collect::<Result<_>>()?
    } else {
        (0..=big_n)
            .map(|h| Ok((coeff_b(big_n, h)?.to_f64().unwrap_or(f64::NAN), (2 * h) as i32, false)))
            .collect::<Result<_>>()?
    };
    let pieces: Vec<Result<IntegralEstimate>> = terms
        .par_iter()
        .map(|&(coeff, j, minus)| {
            let weight = coeff * half_pi.powi(2 * big_n as i32 - j - i32::from(minus));
            let integrand = move |x: f64| {
                let kernel = if minus {
                    // log^{j}x/(x²−1) = log^{j−1}x · (log x/(x²−1))
                    x.ln().powi(j - 1) * log_over_square_minus_one(x)
                } else {
                    x.ln().powi(j) / (x * x + 1.0)
                };
                if kernel == 0.0 {
                    0.0
                } else {
                    base_measure(spec, x) * kernel
                }
            };
            integrate_half_line(integrand, tol).map(|e| e.scale(weight))
        })
        .collect();
    let mut total = IntegralEstimate::new(0.0, 0.0, Method::AdaptiveQuadrature, 0);
    for piece in pieces {
        total = total.combine(&piece?);
    }
    Ok(total.scale((2.0 / PI).powi(n as i32)))
}
