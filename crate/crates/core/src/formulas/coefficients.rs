//! `a_{n,h} = s_{n−1−h}(2², …, (2n−2)²)/(2n−1)!` and
//! `b_{n,h} = s_{n−h}(1², …, (2n−1)²)/(2n)!`: the weights that turn the
//! iterated arctangent densities into one-dimensional log moments.

use crate::error::{ensure, Result};
use crate::exact::{
    elementary_symmetric, even_squares, factorial, int, odd_squares, p_poly_recursive, p_poly_special_value,
    ExactRational, PolyQ,
};

pub fn coeff_a(n: u32, h: u32) -> Result<ExactRational> {
    ensure!(n >= 1 && h < n, OutOfRange, "a_{{n,h}} needs n >= 1 and h < n, got ({n}, {h})");
    let s = elementary_symmetric(&even_squares(n as usize - 1), (n - 1 - h) as usize);
    Ok(s / int(factorial(2 * u64::from(n) - 1)))
}

pub fn coeff_b(n: u32, h: u32) -> Result<ExactRational> {
    ensure!(h <= n, OutOfRange, "b_{{n,h}} needs h <= n, got ({n}, {h})");
    let s = elementary_symmetric(&odd_squares(n as usize), (n - h) as usize);
    Ok(s / int(factorial(2 * u64::from(n))))
}

/// The two polynomial identities linking the coefficient families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientIdentity {
    /// `Σ_{h=0}^{n} b_{n,h} x^{2h} = Σ_{h=1}^{n} a_{n,h−1} (P_{2h−1}(x) − P_{2h−1}(i))`, `n ≥ 1`
    Ab,
    /// `Σ_{h=1}^{n+1} a_{n+1,h−1} x^{2h−1} = Σ_{h=0}^{n} b_{n,h} P_{2h}(x)`, `n ≥ 0`
    Ba,
}

/// Checks one of the identities exactly in `ℚ[x]`.
pub fn coefficient_identity(n: u32, variant: CoefficientIdentity) -> Result<bool> {
    let monomial = |c: ExactRational, d: u32| PolyQ::monomial(c, d as usize);
    match variant {
        CoefficientIdentity::Ab => {
            ensure!(n >= 1, OutOfRange, "need n >= 1");
            let mut lhs = PolyQ::zero();
            for h in 0..=n {
                lhs = lhs + monomial(coeff_b(n, h)?, 2 * h);
            }
            let mut rhs = PolyQ::zero();
            for h in 1..=n {
                let shifted = p_poly_recursive(2 * h - 1) - PolyQ::constant(p_poly_special_value(h)?);
                rhs = rhs + shifted.scale(&coeff_a(n, h - 1)?);
            }
            Ok(lhs == rhs)
        }
        CoefficientIdentity::Ba => {
            let mut lhs = PolyQ::zero();
            for h in 1..=n + 1 {
                lhs = lhs + monomial(coeff_a(n + 1, h - 1)?, 2 * h - 1);
            }
            let mut rhs = PolyQ::zero();
            for h in 0..=n {
                rhs = rhs + p_poly_recursive(2 * h).scale(&coeff_b(n, h)?);
            }
            Ok(lhs == rhs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn small_values() {
        assert_eq!(coeff_a(1, 0).unwrap(), rat(1, 1));
        assert_eq!(coeff_a(2, 1).unwrap(), rat(1, 6));
        assert_eq!(coeff_a(2, 0).unwrap(), rat(2, 3));
        assert_eq!(coeff_b(0, 0).unwrap(), rat(1, 1));
        assert_eq!(coeff_b(1, 0).unwrap(), rat(1, 2));
        assert_eq!(coeff_b(1, 1).unwrap(), rat(1, 2));
        assert!(coeff_a(0, 0).is_err());
        assert!(coeff_a(3, 3).is_err());
        assert!(coeff_b(2, 3).is_err());
    }

    // a_{n,·} and b_{n,·} are the coefficients of the polynomials
    // t ∏ (t² + (2j)²)/(2n−1)! and ∏ (t² + (2j−1)²)/(2n)!, so their sums are
    // products of consecutive squares over factorials
    #[test]
    fn coefficient_sums() {
        for n in 1..=12u32 {
            let sum_b: ExactRational = (0..=n).map(|h| coeff_b(n, h).unwrap()).sum();
            let prod: ExactRational = (1..=n).map(|j| int(((2 * j - 1) * (2 * j - 1) + 1) as u64)).product();
            assert_eq!(sum_b, prod / int(factorial(2 * u64::from(n))));
            let sum_a: ExactRational = (0..n).map(|h| coeff_a(n, h).unwrap()).sum();
            let prod: ExactRational = (1..n).map(|j| int((4 * j * j + 1) as u64)).product();
            assert_eq!(sum_a, prod / int(factorial(2 * u64::from(n) - 1)));
        }
    }

    #[test]
    fn identities_hold() {
        assert!(coefficient_identity(0, CoefficientIdentity::Ba).unwrap());
        assert!(coefficient_identity(0, CoefficientIdentity::Ab).is_err());
        for n in 1..=8 {
            assert!(coefficient_identity(n, CoefficientIdentity::Ab).unwrap(), "ab n = {n}");
            assert!(coefficient_identity(n, CoefficientIdentity::Ba).unwrap(), "ba n = {n}");
        }
    }
}
