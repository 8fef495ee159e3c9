//! The `P_k` family: rational polynomials that close the log-kernel integral
//!
//! ```text
//! ∫₀^∞ x logᵏx dx / ((x²+a²)(x²+b²)) = (π/2)^{k+1} (P_k(2 log a/π) − P_k(2 log b/π)) / (a² − b²)
//! ```
//!
//! Three independent constructions are provided and tested against each
//! other: the defining recursion, a closed form in Bernoulli numbers, and a
//! form in Bernoulli polynomials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::cached;
use super::{
    bernoulli, binomial, int, pow2, sign_pow, ExactRational, GaussianRational, PolyQ,
};
use crate::error::{ensure, Result};

static P_TABLE: OnceLock<RwLock<Vec<PolyQ>>> = OnceLock::new();

/// `P_k` from the recursion
/// `P_k = x^{k+1}/(k+1) + 1/(k+1) Σ_{j≥3 odd} (−1)^{(j+1)/2} C(k+1, j) P_{k+1−j}`.
pub fn p_poly_recursive(k: u32) -> PolyQ {
    cached(&P_TABLE, k as usize, build_recursive)
}

fn build_recursive(len: usize) -> Vec<PolyQ> {
    let mut table: Vec<PolyQ> = Vec::with_capacity(len);
    for k in 0..len {
        let k1 = (k + 1) as u64;
        let mut p = PolyQ::monomial(ExactRational::one(), k + 1);
        for j in (3..=k + 1).step_by(2) {
            let c = sign_pow(j.div_ceil(2) as i64) * int(binomial(k1, j as u64));
            p = p + table[k + 1 - j].scale(&c);
        }
        table.push(p.scale(&ExactRational::new(BigInt::one(), BigInt::from(k1))));
    }
    table
}

/// `P_k` from the closed form
/// `−2/(k+1) Σ_{h=0}^{k} B_h C(k+1, h)(2^{h−1} − 1) iʰ x^{k+1−h}`.
///
/// Only even `h` survive: odd Bernoulli numbers vanish past `h = 1`, and the
/// `h = 1` term carries the factor `2⁰ − 1 = 0`. So every `iʰ` is `±1` and the
/// result is real.
pub fn p_poly_closed(k: u32) -> PolyQ {
    let k1 = u64::from(k) + 1;
    let outer = ExactRational::new(BigInt::from(-2), BigInt::from(k1));
    let mut coeffs = vec![ExactRational::zero(); k1 as usize + 1];
    for h in (0..=u64::from(k)).step_by(2) {
        let c = bernoulli(h as u32)
            * int(binomial(k1, h))
            * (pow2(h as i64 - 1) - ExactRational::one())
            * sign_pow(h as i64 / 2);
        coeffs[(k1 - h) as usize] = &outer * c;
    }
    PolyQ::from_coeffs(coeffs)
}

/// `B_n(y) = Σ_m C(n, m) B_{n−m} y^m` evaluated on `y = x/w`, returned as
/// Gaussian coefficients of `x^m`.
fn bernoulli_poly_scaled(n: u32, w: &GaussianRational) -> Vec<GaussianRational> {
    // 1/w for w = c·iᵉ is (1/c)·i^{−e}; only w ∈ {i, 2i} is needed here
    let inv = GaussianRational::new(
        ExactRational::zero(),
        -(ExactRational::one() / &w.im),
    );
    let mut power = GaussianRational::one();
    (0..=n)
        .map(|m| {
            let c = int(binomial(n.into(), m.into())) * bernoulli(n - m);
            let term = power.scale(&c);
            power = &power * &inv;
            term
        })
        .collect()
}

/// `P_k` rebuilt from the Bernoulli-polynomial expression
/// `2i^{k+1}/(k+1) (B_{k+1}(x/i) − 2ᵏ B_{k+1}(x/2i)) + (2^{k+1} − 2) i^{k+1} B_{k+1}/(k+1)`.
///
/// Errors if any coefficient comes out with a nonzero imaginary part, which
/// would mean the expression does not describe a real polynomial.
pub fn p_poly_bernoulli_form(k: u32) -> Result<PolyQ> {
    let k1 = k + 1;
    let ik = GaussianRational::i_pow(k1.into());
    let first = bernoulli_poly_scaled(k1, &GaussianRational::i());
    let second = bernoulli_poly_scaled(k1, &GaussianRational::new(ExactRational::zero(), int(2)));
    let scale = ExactRational::new(BigInt::from(2), BigInt::from(k1));
    let mut coeffs = Vec::with_capacity(first.len());
    for (m, (a, b)) in first.iter().zip(&second).enumerate() {
        let mut c = (a - &b.scale(&pow2(k.into()))).scale(&scale);
        if m == 0 {
            let constant = bernoulli(k1) * (pow2(k1.into()) - int(2))
                / ExactRational::from_integer(k1.into());
            c = c + GaussianRational::real(constant);
        }
        let c = &c * &ik;
        ensure!(
            c.im.is_zero(),
            InvalidArgument,
            "coefficient of x^{m} in P_{k} has imaginary part {}",
            c.im
        );
        coeffs.push(c.re);
    }
    Ok(PolyQ::from_coeffs(coeffs))
}

/// `P_{2l−1}(i) = (−1)ˡ (2^{2l} − 1) B_{2l} / l`, a real rational.
pub fn p_poly_special_value(l: u32) -> Result<ExactRational> {
    ensure!(l >= 1, OutOfRange, "special value needs l >= 1, got {l}");
    let two_l = 2 * l;
    Ok(sign_pow(l.into()) * (pow2(two_l.into()) - ExactRational::one()) * bernoulli(two_l)
        / ExactRational::from_integer(l.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(c: &[ExactRational]) -> PolyQ {
        PolyQ::from_coeffs(c.to_vec())
    }

    #[test]
    fn listed_values() {
        let z = int(0);
        assert_eq!(p_poly_recursive(0), poly(&[z.clone(), int(1)]));
        assert_eq!(p_poly_recursive(1), poly(&[z.clone(), z.clone(), rat(1, 2)]));
        assert_eq!(
            p_poly_recursive(2),
            poly(&[z.clone(), rat(1, 3), z.clone(), rat(1, 3)])
        );
        assert_eq!(
            p_poly_recursive(4),
            poly(&[z.clone(), rat(7, 15), z.clone(), rat(2, 3), z.clone(), rat(1, 5)])
        );
        assert_eq!(
            p_poly_closed(5),
            poly(&[z.clone(), z.clone(), rat(7, 6), z.clone(), rat(5, 6), z.clone(), rat(1, 6)])
        );
        assert_eq!(p_poly_closed(1), poly(&[z.clone(), z, rat(1, 2)]));
    }

    #[test]
    fn constructions_agree() {
        for k in 0..=40 {
            let rec = p_poly_recursive(k);
            assert_eq!(rec, p_poly_closed(k), "closed form, k = {k}");
            if k <= 20 {
                assert_eq!(rec, p_poly_bernoulli_form(k).unwrap(), "Bernoulli polynomials, k = {k}");
            }
        }
    }

    #[test]
    fn special_values() {
        assert_eq!(p_poly_special_value(1).unwrap(), rat(-1, 2));
        assert_eq!(p_poly_special_value(2).unwrap(), rat(-1, 4));
        assert_eq!(p_poly_special_value(3).unwrap(), rat(-1, 2));
        assert!(p_poly_special_value(0).is_err());
        for l in 1..=20 {
            let direct = p_poly_recursive(2 * l - 1).eval_gaussian(&GaussianRational::i());
            assert!(direct.is_real());
            assert_eq!(direct.re, p_poly_special_value(l).unwrap(), "l = {l}");
        }
    }
}
