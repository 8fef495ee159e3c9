//! Double-exponential (tanh-sinh) quadrature with level refinement and
//! interval bisection.

use rayon::prelude::*;

use super::{IntegralEstimate, Method};
use crate::error::{Error, Result};

/// Nodes closer than this to an endpoint are dropped; the mass they carry is
/// far below any tolerance used here, and it keeps `1/y` finite on the
/// mapped tail.
const ENDPOINT_CUTOFF: f64 = 1e-100;
const MIN_LEVEL: u32 = 4;
const MAX_LEVEL: u32 = 9;
const MAX_DEPTH: u32 = 8;

/// `(offset from the nearer endpoint as a fraction of the width, weight per unit width)`
/// at `t`, with the sign of `t` choosing the endpoint.
fn node(t: f64) -> (f64, f64) {
    let u = std::f64::consts::FRAC_PI_2 * t.sinh();
    let s = 1.0 / (1.0 + (2.0 * u.abs()).exp());
    (s, std::f64::consts::PI * s * (1.0 - s) * t.cosh())
}

fn t_max() -> f64 {
    // s(t) = cutoff  ⇔  u = ½ ln(1/cutoff − 1)
    let u = 0.5 * (1.0 / ENDPOINT_CUTOFF).ln();
    (u / std::f64::consts::FRAC_PI_2).asinh()
}

/// Weighted sum over the nodes `t = k h` with `k ≡ 1 (mod 2)` (or every `k`
/// at level 0).
fn level_sum<F>(f: &F, a: f64, b: f64, level: u32) -> Result<(f64, u64)>
where
    F: Fn(f64) -> f64 + Sync,
{
    let h = 0.5f64.powi(level as i32);
    let k_max = (t_max() / h).floor() as i64;
    let step = if level == 0 { 1 } else { 2 };
    let start = if level == 0 { -k_max } else { -k_max | 1 };
    let ks: Vec<i64> = (start..=k_max).step_by(step).collect();
    let width = b - a;
    let values: Vec<f64> = ks
        .par_iter()
        .map(|&k| {
            let t = k as f64 * h;
            let (s, w) = node(t);
            let x = if t > 0.0 { b - width * s } else if t < 0.0 { a + width * s } else { 0.5 * (a + b) };
            w * width * f(x)
        })
        .collect();
    if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
        let t = ks[pos] as f64 * h;
        return Err(Error::InvalidArgument(format!("integrand is not finite near t = {t} on [{a}, {b}]")));
    }
    // fixed summation order keeps the result independent of the thread count
    Ok((h * values.iter().sum::<f64>(), values.len() as u64))
}

fn single(f: &(impl Fn(f64) -> f64 + Sync), a: f64, b: f64, tol: f64) -> Result<(f64, f64, u64, bool)> {
    let (mut value, mut evals) = level_sum(f, a, b, 0)?;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        let (fresh, n) = level_sum(f, a, b, level)?;
        let next = 0.5 * value + fresh;
        err = (next - value).abs();
        value = next;
        evals += n;
        if level >= MIN_LEVEL && err <= tol * value.abs().max(1.0) {
            return Ok((value, err, evals, true));
        }
    }
    Ok((value, err, evals, false))
}

fn adaptive(f: &(impl Fn(f64) -> f64 + Sync), a: f64, b: f64, tol: f64, depth: u32) -> Result<IntegralEstimate> {
    let (value, err, evals, converged) = single(f, a, b, tol)?;
    if converged || depth >= MAX_DEPTH {
        return Ok(IntegralEstimate::new(value, err, Method::AdaptiveQuadrature, evals));
    }
    let mid = 0.5 * (a + b);
    let left = adaptive(f, a, mid, 0.5 * tol, depth + 1)?;
    let right = adaptive(f, mid, b, 0.5 * tol, depth + 1)?;
    Ok(left.combine(&right))
}

/// `∫_a^b f` for `f` smooth inside `(a, b)`, possibly with integrable
/// endpoint singularities. `tol` is relative to `max(1, |I|)`.
pub fn integrate(f: impl Fn(f64) -> f64 + Sync, a: f64, b: f64, tol: f64) -> Result<IntegralEstimate> {
    crate::error::ensure!(a < b && a.is_finite() && b.is_finite(), InvalidArgument, "need finite a < b");
    adaptive(&f, a, b, tol, 0)
}

/// `∫₀^∞ f`, split at 1 with `x = 1/y` on the tail.
pub fn integrate_half_line(f: impl Fn(f64) -> f64 + Sync, tol: f64) -> Result<IntegralEstimate> {
    let head = integrate(&f, 0.0, 1.0, 0.5 * tol)?;
    let tail = integrate(|y: f64| f(1.0 / y) / (y * y), 0.0, 1.0, 0.5 * tol)?;
    Ok(head.combine(&tail))
}
