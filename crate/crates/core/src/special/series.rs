//! Convergence acceleration in fixed point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fixed::Fixed;
use super::value::ulp;

/// `3 + √8`: the geometric convergence rate of the alternating-sum weights.
const CVZ_RATE: f64 = 5.828_427_124_746_19;

/// Number of weighted terms needed for `bits` of accuracy on a sum whose
/// leading term has size at most 1.
pub(crate) fn cvz_terms(bits: u32) -> u64 {
    (f64::from(bits + 2) * std::f64::consts::LN_2 / CVZ_RATE.ln()).ceil() as u64 + 1
}

/// `Σ_{k≥0} (−1)ᵏ a_k` for a totally monotone sequence `a_k`, by the
/// Cohen–Rodriguez Villegas–Zagier weighted partial sum. The weights are
/// exact integers `c_k`, and the result is `Σ c_k a_k / d` with
/// `d = T_n(3)`.
///
/// Returns the value and an error bound: `2 a_0 / 5.83ⁿ` truncation plus
/// one unit of rounding per term.
pub(crate) fn alternating_sum(bits: u32, term: impl Fn(u64) -> Fixed) -> (Fixed, f64) {
    let n = cvz_terms(bits);
    // d = T_n(3) via T_{k+1} = 6 T_k − T_{k−1}
    let (mut t0, mut t1) = (BigInt::one(), BigInt::from(3));
    for _ in 1..n {
        let next = &t1 * 6 - &t0;
        t0 = std::mem::replace(&mut t1, next);
    }
    let d = t1;
    let mut b = BigInt::from(-1);
    let mut c = -d.clone();
    let mut acc = BigInt::zero();
    let mut first = 0.0f64;
    let n_i = BigInt::from(n);
    for k in 0..n {
        c = &b - &c;
        let a = term(k);
        if k == 0 {
            first = a.to_f64().abs();
        }
        acc += &c * &a.m;
        let k_i = BigInt::from(k);
        b = b * 2 * (&k_i + &n_i) * (&k_i - &n_i) / ((2 * &k_i + 1) * (&k_i + 1));
    }
    let value = Fixed { m: acc, bits }.div_int(d);
    let err = 2.0 * first * CVZ_RATE.powi(-(n as i32)) + (n as f64 + 1.0) * ulp(bits);
    (value, err)
}

/// Richardson extrapolation on partial sums taken at `N₀, 2N₀, 4N₀, …`,
/// assuming the error has an expansion in powers of `1/N`.
///
/// Returns the most extrapolated value and the spread of the last two
/// diagonal entries, which serves as a heuristic error estimate.
pub(crate) fn richardson(partials: &[Fixed]) -> (Fixed, f64) {
    assert!(!partials.is_empty(), "richardson needs at least one partial sum");
    let mut prev: Vec<Fixed> = vec![partials[0].clone()];
    let mut last_diag = partials[0].clone();
    let mut spread = f64::INFINITY;
    for (j, s) in partials.iter().enumerate().skip(1) {
        let mut row = vec![s.clone()];
        for m in 1..=j {
            let factor = BigInt::one() << m;
            let num = &row[m - 1].mul_int(factor.clone()) - &prev[m - 1];
            row.push(num.div_int(factor - 1));
        }
        let diag = row[j].clone();
        spread = (&diag - &last_diag).abs().to_f64();
        last_diag = diag;
        prev = row;
    }
    (last_diag, spread)
}
