//! Mahler measures of the base polynomials as functions of the parameter.

use std::f64::consts::PI;

use super::functions::{script_l3, ti2};

/// Whether the family III parameter is real or purely imaginary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArgumentMode {
    Real,
    Imaginary,
}

/// `m(1 + α z) = log⁺|α|`.
pub fn base_measure_i(alpha_abs: f64) -> f64 {
    alpha_abs.ln().max(0.0)
}

/// `π² m((1 + x) + α (1 + y) z)`:
/// `2 𝓛₃(|α|)` for `|α| ≤ 1` and `π² log|α| + 2 𝓛₃(1/|α|)` above.
pub fn base_measure_ii(alpha_abs: f64) -> f64 {
    if alpha_abs <= 1.0 {
        2.0 * script_l3(alpha_abs)
    } else {
        PI * PI * alpha_abs.ln() + 2.0 * script_l3(1.0 / alpha_abs)
    }
}

/// Real mode: `m(1 + α x + (1 − α) y)`, which is `log⁺α` for `α > 0` and
/// `log(1 − α)` for `α < 0`.
///
/// Imaginary mode: `π m(1 + iα x + (1 − iα) y) = π/4 log(α² + 1) + Ti₂(|α|)`.
pub fn base_measure_iii(alpha: f64, mode: ArgumentMode) -> f64 {
    match mode {
        ArgumentMode::Real if alpha >= 0.0 => alpha.ln().max(0.0),
        ArgumentMode::Real => (-alpha).ln_1p(),
        ArgumentMode::Imaginary => PI / 4.0 * alpha.mul_add(alpha, 1.0).ln() + ti2(alpha.abs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn family_i() {
        assert!((base_measure_i(2.0) - 2f64.ln()).abs() < 1e-16);
        assert_eq!(base_measure_i(0.5), 0.0);
        assert_eq!(base_measure_i(1.0), 0.0);
        assert_eq!(base_measure_i(0.0), 0.0);
    }

    #[test]
    fn family_ii() {
        assert!((base_measure_ii(1.0) - 3.5 * ZETA3).abs() < 1e-14);
        assert_eq!(base_measure_ii(0.0), 0.0);
        let expected = PI * PI * 2f64.ln() + 2.0 * script_l3(0.5);
        assert!((base_measure_ii(2.0) - expected).abs() < 1e-14);
        // continuous across |α| = 1
        assert!((base_measure_ii(1.0 + 1e-9) - base_measure_ii(1.0 - 1e-9)).abs() < 1e-7);
    }

    #[test]
    fn family_iii() {
        assert!((base_measure_iii(-1.0, ArgumentMode::Real) - 2f64.ln()).abs() < 1e-16);
        assert_eq!(base_measure_iii(0.5, ArgumentMode::Real), 0.0);
        assert_eq!(base_measure_iii(0.0, ArgumentMode::Imaginary), 0.0);
        assert!((base_measure_iii(3.0, ArgumentMode::Real) - 3f64.ln()).abs() < 1e-16);
        // symmetric in the sign of α in imaginary mode
        let a = base_measure_iii(0.7, ArgumentMode::Imaginary);
        assert!((a - base_measure_iii(-0.7, ArgumentMode::Imaginary)).abs() < 1e-16);
    }
}
