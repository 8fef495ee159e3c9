//! Randomized quasi-Monte Carlo over the torus.
//!
//! `m(P) = ∫_{Tᵈ} log|P|`. The substitution `α = ∏ (1−xⱼ)/(1+xⱼ)` makes the
//! family polynomials rational; since `m(∏ (1 + xⱼ)) = 0`, the measure equals
//! that of the numerator, which is what gets sampled.
//!
//! Points come from the additive recurrence `{k·g}` with `g` built from the
//! generalized golden ratio of the dimension, shifted by a uniform random
//! vector per batch (Cranley–Patterson rotation). The spread of the batch
//! means gives the statistical error. Batches run in parallel and are
//! reduced in batch order, so results depend only on `(seed, samples)`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{IntegralEstimate, Method};
use crate::error::{ensure, Error, Result};
use crate::formulas::{Family, FamilySpec};

pub const MAX_TORUS_DIMENSION: u32 = 4;
pub const MAX_SAMPLES: u64 = 1_000_000_000;
const BATCHES: u64 = 32;

/// How sample points are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum QmcMode {
    /// Shifted low-discrepancy recurrence.
    #[default]
    LowDiscrepancy,
    /// Independent uniform points; error decays like `N^{−1/2}`.
    PseudoRandom,
}

/// `g_j = φ_d^{−(j+1)}` where `φ_d` is the positive root of `x^{d+1} = x + 1`.
fn recurrence_step(d: usize) -> Vec<f64> {
    let mut phi = 2.0f64;
    for _ in 0..60 {
        phi = (1.0 + phi).powf(1.0 / (d as f64 + 1.0));
    }
    (1..=d).map(|j| phi.powi(-(j as i32))).collect()
}

/// Numerator of the substituted polynomial at the torus point given by
/// angles; `angles[..n]` are the transform variables, the rest the base ones.
fn numerator(spec: FamilySpec, z: &[Complex64]) -> Complex64 {
    let n = spec.n_transforms() as usize;
    let one = Complex64::new(1.0, 0.0);
    let (num, den) = z[..n].iter().fold((one, one), |(p, q), x| (p * (one - x), q * (one + x)));
    let base = &z[n..];
    match spec.family() {
        Family::I => den + num * base[0],
        Family::II => den * (one + base[0]) + num * (one + base[1]) * base[2],
        Family::III => den + num * base[0] + (den - num) * base[1],
    }
}

/// Sum of `log|P|` over one batch and the number of skipped zeros.
fn batch(spec: FamilySpec, mode: QmcMode, seed: u64, index: u64, count: u64, dim: usize) -> (f64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let shift: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>()).collect();
    let step = recurrence_step(dim);
    let mut u = vec![0.0; dim];
    let mut z = vec![Complex64::new(0.0, 0.0); dim];
    let (mut sum, mut skipped) = (0.0f64, 0u64);
    for k in 0..count {
        for j in 0..dim {
            u[j] = match mode {
                QmcMode::LowDiscrepancy => (shift[j] + (k as f64) * step[j]).fract(),
                QmcMode::PseudoRandom => rng.gen::<f64>(),
            };
            z[j] = Complex64::from_polar(1.0, TAU * u[j]);
        }
        let v = numerator(spec, &z).norm();
        if v > 0.0 && v.is_finite() {
            sum += v.ln();
        } else {
            skipped += 1;
        }
    }
    (sum, skipped)
}

/// Torus average of `log|P|` with the default low-discrepancy points.
pub fn torus_qmc(spec: FamilySpec, samples: u64, seed: u64) -> Result<IntegralEstimate> {
    torus_qmc_with(spec, samples, seed, QmcMode::default())
}

pub fn torus_qmc_with(spec: FamilySpec, samples: u64, seed: u64, mode: QmcMode) -> Result<IntegralEstimate> {
    let dim = spec.torus_dimension() as usize;
    ensure!(
        dim as u32 <= MAX_TORUS_DIMENSION,
        UnsupportedSpec,
        "torus dimension {dim} exceeds {MAX_TORUS_DIMENSION}"
    );
    ensure!((BATCHES..=MAX_SAMPLES).contains(&samples), OutOfRange, "samples must lie in [{BATCHES}, {MAX_SAMPLES}]");
    let per_batch = samples / BATCHES;
    let results: Vec<(f64, u64)> =
        (0..BATCHES).into_par_iter().map(|b| batch(spec, mode, seed, b, per_batch, dim)).collect();
    let skipped: u64 = results.iter().map(|r| r.1).sum();
    if skipped * 2 > samples {
        return Err(Error::InvalidArgument(format!("{skipped} of {samples} samples hit zeros of the polynomial")));
    }
    let means: Vec<f64> = results.iter().map(|(s, k)| s / (per_batch - k) as f64).collect();
    let mean = means.iter().sum::<f64>() / BATCHES as f64;
    let var = means.iter().map(|m| (m - mean).powi(2)).sum::<f64>() / (BATCHES - 1) as f64;
    let sigma = (var / BATCHES as f64).sqrt().max(f64::MIN_POSITIVE);
    let mut estimate = IntegralEstimate::new(mean, sigma, Method::Qmc, per_batch * BATCHES);
    estimate.skipped = skipped;
    Ok(estimate)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    fn spec(f: Family, n: u32) -> FamilySpec {
        FamilySpec::new(f, n).unwrap()
    }

    #[test]
    fn family_i_one_transform() {
        let expected = 2.0 * CATALAN / std::f64::consts::PI;
        let e = torus_qmc(spec(Family::I, 1), 1_000_000, 42).unwrap();
        assert!(e.error_estimate > 0.0 && e.error_estimate < 1e-3);
        assert!((e.value - expected).abs() < 4.0 * e.error_estimate + 1e-4, "{e:?}");
    }

    #[test]
    fn family_ii_base() {
        let expected = 3.5 * 1.202_056_903_159_594 / (std::f64::consts::PI.powi(2));
        let e = torus_qmc(spec(Family::II, 0), 1_000_000, 1).unwrap();
        assert!((e.value - expected).abs() < 1e-3, "{e:?}");
    }

    #[test]
    fn reproducible() {
        let a = torus_qmc(spec(Family::III, 1), 64_000, 9).unwrap();
        let b = torus_qmc(spec(Family::III, 1), 64_000, 9).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.error_estimate.to_bits(), b.error_estimate.to_bits());
        let c = torus_qmc(spec(Family::III, 1), 64_000, 10).unwrap();
        assert_ne!(a.value.to_bits(), c.value.to_bits());
    }

    #[test]
    fn pseudo_random_rate() {
        let s = spec(Family::I, 1);
        let small = torus_qmc_with(s, 32_000, 3, QmcMode::PseudoRandom).unwrap();
        let large = torus_qmc_with(s, 3_200_000, 3, QmcMode::PseudoRandom).unwrap();
        let ratio = small.error_estimate / large.error_estimate;
        // N^{-1/2} predicts 10; batch-variance estimates scatter around it
        assert!((5.0..20.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn guards() {
        assert!(torus_qmc(spec(Family::II, 2), 1000, 0).is_err());
        assert!(torus_qmc(spec(Family::I, 1), 10, 0).is_err());
    }

    #[test]
    fn numerator_zeros() {
        let s = spec(Family::I, 1);
        let i = Complex64::new(0.0, 1.0);
        // (1 + i) + (1 − i)(−i) = 0
        assert!(numerator(s, &[i, -i]).norm() < 1e-15);
        assert!((numerator(s, &[Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)]).norm() - 2.0).abs() < 1e-15);
    }
}
