//! Double-precision special functions for the integrands.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::exact::bernoulli;

const TERMS: usize = 48;

fn bernoulli_f64() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| (0..TERMS as u32 + 2).map(|n| bernoulli(n).to_f64().unwrap_or(0.0)).collect())
}

const ZETA2: f64 = PI * PI / 6.0;
const ZETA3: f64 = 1.202_056_903_159_594_3;

/// `Li₃(x)` for `0 ≤ x ≤ 1`.
fn li3_unit(x: f64) -> f64 {
    if x <= 0.5 {
        let mut sum = 0.0;
        let mut p = x;
        for k in 1..200 {
            let term = p / (k * k * k) as f64;
            sum += term;
            if term < 1e-18 * sum.abs().max(f64::MIN_POSITIVE) {
                break;
            }
            p *= x;
        }
        return sum;
    }
    // expansion in μ = log x around 1
    let mu = x.ln();
    if mu == 0.0 {
        return ZETA3;
    }
    let b = bernoulli_f64();
    let mut sum = ZETA3 + ZETA2 * mu + 0.5 * mu * mu * (1.5 - (-mu).ln());
    let mut pow = mu * mu * mu / 6.0;
    for k in 3..TERMS {
        // ζ(3 − k): ζ(0) = −1/2, ζ(−m) = −B_{m+1}/(m+1)
        let m = k - 3;
        let z = if m == 0 { -0.5 } else { -b[m + 1] / (m + 1) as f64 };
        sum += z * pow;
        pow *= mu / (k + 1) as f64;
    }
    sum
}

/// `Li₃(x)` for `−1 ≤ x ≤ 1`.
pub fn li3(x: f64) -> f64 {
    if x >= 0.0 {
        li3_unit(x)
    } else {
        0.25 * li3_unit(x * x) - li3_unit(-x)
    }
}

/// `𝓛₃(t) = Li₃(t) − Li₃(−t)` for `0 ≤ t ≤ 1`.
pub fn script_l3(t: f64) -> f64 {
    li3(t) - li3(-t)
}

/// `Li₂(z)` for `|z| ≤ 1` away from 1, from `Σ B_n uⁿ⁺¹/(n+1)!` with
/// `u = −log(1 − z)`.
pub fn li2_complex(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let b = bernoulli_f64();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = u;
    for (n, bn) in b.iter().enumerate().take(TERMS) {
        sum += pow * *bn;
        pow = pow * u / (n + 2) as f64;
    }
    sum
}

/// The inverse tangent integral `Ti₂(x) = Im Li₂(i x)`, for every real `x`.
pub fn ti2(x: f64) -> f64 {
    if x < 0.0 {
        return -ti2(-x);
    }
    if x > 1.0 {
        return ti2(1.0 / x) + FRAC_PI_2 * x.ln();
    }
    li2_complex(Complex64::new(0.0, x)).im
}

/// `log x / (x² − 1)`, continued by its value `1/2` at `x = 1`; a series is
/// used within `10⁻³` of 1 to avoid cancellation.
pub fn log_over_square_minus_one(x: f64) -> f64 {
    let t = x - 1.0;
    if t.abs() < 1e-3 {
        // log(1+t)/t = 1 − t/2 + t²/3 − t³/4 + t⁴/5 − …
        let ratio = 1.0 + t * (-0.5 + t * (1.0 / 3.0 + t * (-0.25 + t * (0.2 - t / 6.0))));
        ratio / (2.0 + t)
    } else {
        x.ln() / (x * x - 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li3_values() {
        assert!((li3(1.0) - ZETA3).abs() < 1e-15);
        assert!((li3(-1.0) + 0.75 * ZETA3).abs() < 1e-15);
        // Li₃(1/2) = 7/8 ζ(3) − π²/12 log 2 + log³2/6
        let l2 = 2f64.ln();
        let expected = 0.875 * ZETA3 - PI * PI / 12.0 * l2 + l2.powi(3) / 6.0;
        assert!((li3(0.5) - expected).abs() < 1e-15);
        assert_eq!(li3(0.0), 0.0);
    }

    #[test]
    fn li3_branches_agree() {
        for x in [0.499f64, 0.5, 0.501, 0.7] {
            let direct: f64 = (1..4000).map(|k| x.powi(k) / f64::from(k).powi(3)).sum();
            assert!((li3(x) - direct).abs() < 1e-15, "{x}");
        }
    }

    #[test]
    fn script_l3_at_one() {
        assert!((script_l3(1.0) - 1.75 * ZETA3).abs() < 1e-14);
    }

    #[test]
    fn ti2_values() {
        let catalan = 0.915_965_594_177_219;
        assert!((ti2(1.0) - catalan).abs() < 1e-15);
        let x = 0.3f64;
        let series: f64 = (0..60).map(|k| (-1f64).powi(k) * x.powi(2 * k + 1) / f64::from(2 * k + 1).powi(2)).sum();
        assert!((ti2(x) - series).abs() < 1e-16);
        assert!((ti2(3.0) - ti2(1.0 / 3.0) - FRAC_PI_2 * 3f64.ln()).abs() < 1e-15);
        assert!((ti2(-0.4) + ti2(0.4)).abs() < 1e-17);
    }

    #[test]
    fn removable_singularity() {
        assert_eq!(log_over_square_minus_one(1.0), 0.5);
        for x in [0.9995f64, 1.0005, 0.99, 1.2] {
            let naive = x.ln() / (x * x - 1.0);
            assert!((log_over_square_minus_one(x) - naive).abs() < 1e-12);
        }
        assert!(log_over_square_minus_one(1.0 + 1e-12).is_finite());
    }
}
