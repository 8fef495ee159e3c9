//! Exact identities linking Bernoulli numbers, Euler numbers, elementary
//! symmetric functions of the odd and even square lattices, and the `P_k`
//! polynomials.
//!
//! Each function evaluates both sides over ℚ (or ℚ[x]) and reports whether
//! they agree. Index ranges outside the stated domain are errors, not
//! `false`.
//!
//! Notation: `S_odd(n) = (1², 3², …, (2n−1)²)` and
//! `S_even(m) = (2², 4², …, (2m)²)`.

use num_traits::{One, Zero};

use super::{
    bernoulli, binomial, elementary_symmetric, elementary_symmetric_all, euler_number, even_squares,
    factorial, int, odd_squares, p_poly_recursive, p_poly_special_value, pow2, sign_pow, ExactRational,
    GaussianRational, PolyQ,
};
use crate::error::{ensure, Result};

/// Which of a pair (or triple) of companion identities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    First,
    Second,
    Third,
}

/// The Euler/Bernoulli factorial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorialSum {
    /// `Σ_h s_{n−h}(S_odd(n)) (−1)ʰ E_{2h} = (2n)!`
    Euler,
    /// `Σ_h s_{n−h}(S_odd(n)) (−1)^{h+1} E_{2h+2} = (2n+1)!`
    EulerShifted,
    /// `Σ_{h≥1} s_{n−h}(S_even(n−1)) (−1)^{h+1} 2^{2h}(2^{2h}−1)/h · B_{2h} = 2(2n−1)!`
    Bernoulli,
}

fn q(n: impl Into<num_bigint::BigInt>) -> ExactRational {
    int(n)
}

fn binom(n: u32, k: u32) -> ExactRational {
    int(binomial(n.into(), k.into()))
}

/// `s_j` read out of a precomputed table, zero past its end.
fn s_at(table: &[ExactRational], j: i64) -> ExactRational {
    usize::try_from(j)
        .ok()
        .and_then(|j| table.get(j).cloned())
        .unwrap_or_else(ExactRational::zero)
}

/// Symmetric functions of the odd and even squares, related through the
/// binomial transform:
///
/// * `First`, `1 ≤ l ≤ n`:
///   `2n (−1)ˡ s_{n−l}(S_even(n−1)) = Σ_{h=l}^{n} (−1)ʰ C(2h, 2l−1) s_{n−h}(S_odd(n))`
/// * `Second`, `0 ≤ l ≤ n`:
///   `(2n+1)(−1)ˡ s_{n−l}(S_odd(n)) = Σ_{h=l}^{n} (−1)ʰ C(2h+1, 2l) s_{n−h}(S_even(n))`
pub fn square_lattice_identity(n: u32, l: u32, variant: Variant) -> Result<bool> {
    let (n_, l_) = (i64::from(n), i64::from(l));
    match variant {
        Variant::First => {
            ensure!(1 <= l && l <= n, OutOfRange, "need 1 <= l <= n, got n={n}, l={l}");
            let even = elementary_symmetric_all(&even_squares(n as usize - 1));
            let odd = elementary_symmetric_all(&odd_squares(n as usize));
            let lhs = q(2 * n_) * sign_pow(l_) * s_at(&even, n_ - l_);
            let rhs: ExactRational = (l..=n)
                .map(|h| sign_pow(h.into()) * binom(2 * h, 2 * l - 1) * s_at(&odd, n_ - i64::from(h)))
                .sum();
            Ok(lhs == rhs)
        }
        Variant::Second => {
            ensure!(l <= n, OutOfRange, "need 0 <= l <= n, got n={n}, l={l}");
            let even = elementary_symmetric_all(&even_squares(n as usize));
            let odd = elementary_symmetric_all(&odd_squares(n as usize));
            let lhs = q(2 * n_ + 1) * sign_pow(l_) * s_at(&odd, n_ - l_);
            let rhs: ExactRational = (l..=n)
                .map(|h| sign_pow(h.into()) * binom(2 * h + 1, 2 * l) * s_at(&even, n_ - i64::from(h)))
                .sum();
            Ok(lhs == rhs)
        }
        Variant::Third => Err(crate::Error::InvalidArgument(
            "the square-lattice identities come in a pair".into(),
        )),
    }
}

/// Bernoulli-weighted sums of symmetric functions:
///
/// * `First`, `1 ≤ l ≤ n`:
///   `s_{n−l}(S_odd(n)) = n Σ_{s=0}^{n−l} s_{n−l−s}(S_even(n−1)) B_{2s} C(2(l+s), 2s)(2^{2s}−2)(−1)^{s+1} / (l+s)`
/// * `Second`, `n ≥ 1`, `l` ignored:
///   `((2n)!/(2ⁿ n!))² = 2n Σ_{s=1}^{n} s_{n−s}(S_even(n−1)) B_{2s}(2^{2s}−1)(−1)^{s+1} / s`
/// * `Third`, `0 ≤ l ≤ n`:
///   `(2l+1) s_{n−l}(S_even(n)) = (2n+1) Σ_{s=0}^{n−l} s_{n−l−s}(S_odd(n)) B_{2s} C(2(l+s), 2s)(2^{2s}−2)(−1)^{s+1}`
pub fn bernoulli_symmetric_identity(n: u32, l: u32, variant: Variant) -> Result<bool> {
    let (n_, l_) = (i64::from(n), i64::from(l));
    let weight = |s: u32| bernoulli(2 * s) * (pow2(2 * i64::from(s)) - q(2)) * sign_pow(i64::from(s) + 1);
    match variant {
        Variant::First => {
            ensure!(1 <= l && l <= n, OutOfRange, "need 1 <= l <= n, got n={n}, l={l}");
            let even = elementary_symmetric_all(&even_squares(n as usize - 1));
            let lhs = elementary_symmetric(&odd_squares(n as usize), (n - l) as usize);
            let sum: ExactRational = (0..=n - l)
                .map(|s| {
                    s_at(&even, n_ - l_ - i64::from(s)) * weight(s) * binom(2 * (l + s), 2 * s)
                        / q(l + s)
                })
                .sum();
            Ok(lhs == q(n) * sum)
        }
        Variant::Second => {
            ensure!(n >= 1, OutOfRange, "need n >= 1, got n={n}");
            let even = elementary_symmetric_all(&even_squares(n as usize - 1));
            let ratio = ExactRational::new(factorial(2 * u64::from(n)), factorial(n.into()))
                / pow2(n_);
            let rhs: ExactRational = (1..=n)
                .map(|s| {
                    s_at(&even, n_ - i64::from(s))
                        * bernoulli(2 * s)
                        * (pow2(2 * i64::from(s)) - q(1))
                        * sign_pow(i64::from(s) + 1)
                        / q(s)
                })
                .sum();
            Ok(&ratio * &ratio == q(2 * n) * rhs)
        }
        Variant::Third => {
            ensure!(l <= n, OutOfRange, "need 0 <= l <= n, got n={n}, l={l}");
            let odd = elementary_symmetric_all(&odd_squares(n as usize));
            let lhs = q(2 * l + 1) * elementary_symmetric(&even_squares(n as usize), (n - l) as usize);
            let sum: ExactRational = (0..=n - l)
                .map(|s| s_at(&odd, n_ - l_ - i64::from(s)) * weight(s) * binom(2 * (l + s), 2 * s))
                .sum();
            Ok(lhs == q(2 * n + 1) * sum)
        }
    }
}

/// The Bernoulli sum that turns into Euler numbers, for `1 ≤ l ≤ n`:
///
/// ```text
/// n Σ_{s=0}^{n−l} s_{n−l−s}(S_even(n−1)) B_{2s} C(2(l+s), 2s) 2^{2s}(2^{2s}−2)(−1)^{s+1} / (l+s)
///   = Σ_{k=l}^{n} (−1)^{k+l} C(2k, 2l) s_{n−k}(S_odd(n)) E_{2(k−l)}
/// ```
///
/// `l = 0` is rejected: the `s = 0` term of the left side divides by zero.
pub fn bernoulli_euler_identity(n: u32, l: u32) -> Result<bool> {
    ensure!(
        1 <= l && l <= n,
        OutOfRange,
        "need 1 <= l <= n (the left side is undefined at l = 0), got n={n}, l={l}"
    );
    let (n_, l_) = (i64::from(n), i64::from(l));
    let even = elementary_symmetric_all(&even_squares(n as usize - 1));
    let odd = elementary_symmetric_all(&odd_squares(n as usize));
    let lhs: ExactRational = (0..=n - l)
        .map(|s| {
            let s_ = i64::from(s);
            s_at(&even, n_ - l_ - s_)
                * bernoulli(2 * s)
                * binom(2 * (l + s), 2 * s)
                * pow2(2 * s_)
                * (pow2(2 * s_) - q(2))
                * sign_pow(s_ + 1)
                / q(l + s)
        })
        .sum::<ExactRational>()
        * q(n);
    let rhs: ExactRational = (l..=n)
        .map(|k| {
            sign_pow(i64::from(k + l))
                * binom(2 * k, 2 * l)
                * s_at(&odd, n_ - i64::from(k))
                * q(euler_number(2 * (k - l)))
        })
        .sum();
    Ok(lhs == rhs)
}

/// Sums of symmetric functions against Euler or Bernoulli numbers that
/// collapse to factorials.
pub fn factorial_sum_identity(n: u32, which: FactorialSum) -> Result<bool> {
    let n_ = i64::from(n);
    match which {
        FactorialSum::Euler | FactorialSum::EulerShifted => {
            let odd = elementary_symmetric_all(&odd_squares(n as usize));
            let shifted = which == FactorialSum::EulerShifted;
            let lhs: ExactRational = (0..=n)
                .map(|h| {
                    let (sign, index) = if shifted { (h + 1, 2 * h + 2) } else { (h, 2 * h) };
                    s_at(&odd, n_ - i64::from(h)) * sign_pow(sign.into()) * q(euler_number(index))
                })
                .sum();
            let target = factorial(2 * u64::from(n) + u64::from(shifted));
            Ok(lhs == q(target))
        }
        FactorialSum::Bernoulli => {
            ensure!(n >= 1, OutOfRange, "need n >= 1, got n={n}");
            let even = elementary_symmetric_all(&even_squares(n as usize - 1));
            let lhs: ExactRational = (1..=n)
                .map(|h| {
                    let h_ = i64::from(h);
                    s_at(&even, n_ - h_)
                        * sign_pow(h_ + 1)
                        * pow2(2 * h_)
                        * (pow2(2 * h_) - q(1))
                        * bernoulli(2 * h)
                        / q(h)
                })
                .sum();
            Ok(lhs == q(2) * q(factorial(2 * u64::from(n) - 1)))
        }
    }
}

/// `(1 − 2^{k−1}) B_k = Σ_{s=0}^{k} 2^{s−1} C(k, s) B_s`.
pub fn bernoulli_halving_identity(k: u32) -> bool {
    let k_ = i64::from(k);
    let lhs = (q(1) - pow2(k_ - 1)) * bernoulli(k);
    let rhs: ExactRational = (0..=k)
        .map(|s| pow2(i64::from(s) - 1) * binom(k, s) * bernoulli(s))
        .sum();
    lhs == rhs
}

/// Monomials in the `P_k` basis:
/// `x^{2h} = Σ_{k=0}^{h−1} (−1)ᵏ C(2h, 2k+1) P_{2h−2k−1}(x)` and
/// `x^{2h+1} = Σ_{k=0}^{h} (−1)ᵏ C(2h+1, 2k+1) P_{2h−2k}(x)`.
///
/// `degree` is the exponent on the left; `degree = 0` is rejected because the
/// even sum is empty there.
pub fn monomial_expansion_identity(degree: u32) -> Result<bool> {
    ensure!(degree >= 1, OutOfRange, "need degree >= 1");
    let rhs = (0..=(degree - 1) / 2).fold(PolyQ::zero(), |acc, k| {
        let c = sign_pow(k.into()) * binom(degree, 2 * k + 1);
        acc + p_poly_recursive(degree - 2 * k - 1).scale(&c)
    });
    Ok(rhs == PolyQ::monomial(ExactRational::one(), degree as usize))
}

/// The polynomial identities behind the induction on the number of
/// variables, with both sides scaled to clear factorials:
///
/// * `First`, `n ≥ 1`:
///   `Σ_{h=0}^{n} s_{n−h}(S_odd(n)) x^{2h} = 2n Σ_{h=1}^{n} s_{n−h}(S_even(n−1)) (P_{2h−1}(x) − P_{2h−1}(i))`
/// * `Second`, `n ≥ 0`:
///   `Σ_{h=0}^{n} s_{n−h}(S_even(n)) x^{2h+1} = (2n+1) Σ_{h=0}^{n} s_{n−h}(S_odd(n)) P_{2h}(x)`
pub fn induction_step_identity(n: u32, variant: Variant) -> Result<bool> {
    let n_ = i64::from(n);
    let odd = elementary_symmetric_all(&odd_squares(n as usize));
    match variant {
        Variant::First => {
            ensure!(n >= 1, OutOfRange, "need n >= 1");
            let even = elementary_symmetric_all(&even_squares(n as usize - 1));
            let lhs = (0..=n).fold(PolyQ::zero(), |acc, h| {
                acc + PolyQ::monomial(s_at(&odd, n_ - i64::from(h)), 2 * h as usize)
            });
            let mut rhs = PolyQ::zero();
            for h in 1..=n {
                let shifted = p_poly_recursive(2 * h - 1) - PolyQ::constant(p_poly_special_value(h)?);
                rhs = rhs + shifted.scale(&s_at(&even, n_ - i64::from(h)));
            }
            Ok(lhs == rhs.scale(&q(2 * n)))
        }
        Variant::Second => {
            let even = elementary_symmetric_all(&even_squares(n as usize));
            let lhs = (0..=n).fold(PolyQ::zero(), |acc, h| {
                acc + PolyQ::monomial(s_at(&even, n_ - i64::from(h)), 2 * h as usize + 1)
            });
            let rhs = (0..=n).fold(PolyQ::zero(), |acc, h| {
                acc + p_poly_recursive(2 * h).scale(&s_at(&odd, n_ - i64::from(h)))
            });
            Ok(lhs == rhs.scale(&q(2 * n + 1)))
        }
        Variant::Third => Err(crate::Error::InvalidArgument(
            "the induction identities come in a pair".into(),
        )),
    }
}

/// Structural facts about `P_k`, each checked exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyProperties {
    /// `deg P_k = k + 1`.
    pub degree: bool,
    /// Every monomial has the parity of `k + 1`.
    pub parity: bool,
    /// `P_k(0) = 0`.
    pub vanishes_at_zero: bool,
    /// `P_{2l}(i) = 0` for `l > 0`; vacuous for odd `k` and `k = 0`.
    pub vanishes_at_i: bool,
    /// For `k = 2l`: `(2l+1) P_{2l} = P'_{2l+1}`. For `k = 2l−1`:
    /// `2l P_{2l−1} ≡ P'_{2l} mod x`.
    pub derivative: bool,
}

impl PolyProperties {
    pub fn all(&self) -> bool {
        self.degree && self.parity && self.vanishes_at_zero && self.vanishes_at_i && self.derivative
    }
}

/// Checks the structural properties of `P_k`.
pub fn p_poly_properties(k: u32) -> PolyProperties {
    let p = p_poly_recursive(k);
    let k1 = k as usize + 1;
    let vanishes_at_i = k % 2 == 1 || k == 0 || p.eval_gaussian(&GaussianRational::i()).is_zero();
    let derivative = if k % 2 == 0 {
        p.scale(&q(k + 1)) == p_poly_recursive(k + 1).derivative()
    } else {
        p.scale(&q(k + 1)) == p_poly_recursive(k + 1).derivative().without_constant()
    };
    let parity = p.support().all(|d| d % 2 == k1 % 2);
    PolyProperties {
        degree: p.degree() == Some(k1),
        parity,
        vanishes_at_zero: p.coeff(0).is_zero(),
        vanishes_at_i,
        derivative,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_lattice_examples() {
        assert!(square_lattice_identity(1, 1, Variant::First).unwrap());
        assert!(square_lattice_identity(5, 3, Variant::First).unwrap());
        assert!(square_lattice_identity(5, 2, Variant::Second).unwrap());
        assert!(square_lattice_identity(3, 0, Variant::First).is_err());
        assert!(square_lattice_identity(3, 4, Variant::Second).is_err());
    }

    #[test]
    fn bernoulli_symmetric_examples() {
        assert!(bernoulli_symmetric_identity(1, 0, Variant::Second).unwrap());
        assert!(bernoulli_symmetric_identity(7, 3, Variant::First).unwrap());
        assert!(bernoulli_symmetric_identity(6, 0, Variant::Third).unwrap());
        assert!(bernoulli_symmetric_identity(0, 0, Variant::Second).is_err());
    }

    #[test]
    fn bernoulli_euler_examples() {
        assert!(bernoulli_euler_identity(1, 1).unwrap());
        assert!(bernoulli_euler_identity(4, 2).unwrap());
        assert!(bernoulli_euler_identity(6, 6).unwrap());
        assert!(bernoulli_euler_identity(6, 0).is_err());
    }

    #[test]
    fn factorial_sum_examples() {
        assert!(factorial_sum_identity(0, FactorialSum::Euler).unwrap());
        assert!(factorial_sum_identity(5, FactorialSum::Bernoulli).unwrap());
        assert!(factorial_sum_identity(4, FactorialSum::EulerShifted).unwrap());
        assert!(factorial_sum_identity(0, FactorialSum::Bernoulli).is_err());
    }

    #[test]
    fn a_wrong_identity_is_detected() {
        // perturbing the target must flip the answer, so `true` is not vacuous
        let odd = elementary_symmetric_all(&odd_squares(3));
        let lhs: ExactRational = (0..=3u32)
            .map(|h| s_at(&odd, 3 - i64::from(h)) * sign_pow(h.into()) * q(euler_number(2 * h)))
            .sum();
        assert_eq!(lhs, q(factorial(6)));
        assert_ne!(lhs, q(factorial(6)) + q(1));
    }

    #[test]
    fn halving_and_monomials() {
        for k in 0..=40 {
            assert!(bernoulli_halving_identity(k), "k = {k}");
        }
        for d in 1..=31 {
            assert!(monomial_expansion_identity(d).unwrap(), "degree {d}");
        }
    }

    #[test]
    fn polynomial_properties() {
        for k in 0..=40 {
            assert!(p_poly_properties(k).all(), "k = {k}: {:?}", p_poly_properties(k));
        }
    }

    #[test]
    fn induction_steps() {
        for n in 0..=12 {
            if n >= 1 {
                assert!(induction_step_identity(n, Variant::First).unwrap(), "n = {n}");
            }
            assert!(induction_step_identity(n, Variant::Second).unwrap(), "n = {n}");
        }
    }
}
