//! Independent numerical checks of the closed forms: quadrature of the
//! reduced one-dimensional integrals and of individual integral
//! evaluations, and quasi-Monte Carlo over the torus.
//!
//! Everything here runs in double precision; the tolerances involved are
//! far above rounding level.

mod base;
mod checks;
mod functions;
mod qmc;
mod quadrature;
mod reduced;

use std::fmt;

pub use base::{base_measure_i, base_measure_ii, base_measure_iii, ArgumentMode};
pub use checks::{
    kernel_integral_check, power_kernel_check, log_moment_check, li1_log_integral_check, log1p_square_moment_check,
    ti2_moment_check, Check,
};
pub use functions::{li2_complex, li3, log_over_square_minus_one, script_l3, ti2};
pub use qmc::{torus_qmc, torus_qmc_with, QmcMode, MAX_SAMPLES, MAX_TORUS_DIMENSION};
pub use quadrature::{integrate, integrate_half_line};
pub use reduced::{reduced_integral, MAX_REDUCED_TRANSFORMS};

/// How an estimate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Tanh-sinh quadrature; the error is the difference between the last
    /// two refinement levels, a heuristic.
    AdaptiveQuadrature,
    /// Randomized quasi-Monte Carlo; the error is one statistical sigma.
    Qmc,
    /// A directly summed series or closed expression.
    Series,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::AdaptiveQuadrature => "adaptive_quadrature",
            Method::Qmc => "qmc",
            Method::Series => "series",
        })
    }
}

/// A numerical value with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralEstimate {
    pub value: f64,
    pub error_estimate: f64,
    pub method: Method,
    pub evaluations: u64,
    /// Sample points dropped because the integrand was singular there.
    pub skipped: u64,
}

impl IntegralEstimate {
    pub fn new(value: f64, error_estimate: f64, method: Method, evaluations: u64) -> Self {
        IntegralEstimate { value, error_estimate, method, evaluations, skipped: 0 }
    }

    /// Sum of two independent pieces.
    pub(crate) fn combine(&self, other: &Self) -> Self {
        IntegralEstimate {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            method: self.method,
            evaluations: self.evaluations + other.evaluations,
            skipped: self.skipped + other.skipped,
        }
    }

    pub(crate) fn scale(&self, c: f64) -> Self {
        IntegralEstimate { value: self.value * c, error_estimate: self.error_estimate * c.abs(), ..*self }
    }

    /// Whether `|value − target| ≤ k · error_estimate`.
    pub fn within_sigmas(&self, target: f64, k: f64) -> bool {
        (self.value - target).abs() <= k * self.error_estimate
    }
}
