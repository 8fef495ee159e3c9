//! Exact arithmetic over ℚ and ℚ(i).
//!
//! Everything in this module is exact: rationals are [`BigRational`] values in
//! lowest terms, polynomials are dense coefficient vectors of rationals, and
//! the Bernoulli/Euler/`P_k` tables are memoized grow-only caches that are
//! safe to share between threads.

mod gaussian;
pub mod identities;
mod numbers;
mod pk;
mod poly;
mod symmetric;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use gaussian::GaussianRational;
pub use numbers::{bernoulli, euler_number};
pub use pk::{p_poly_bernoulli_form, p_poly_closed, p_poly_recursive, p_poly_special_value};
pub use poly::PolyQ;
pub use symmetric::{elementary_symmetric, elementary_symmetric_all, even_squares, odd_squares};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)` via the multiplicative formula; zero when
/// `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // each partial product is C(n - k + i, i), so the division is exact
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// The rational `num / den`.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(value: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(value.into())
}

/// `2^e` for any sign of `e`.
pub fn pow2(e: i64) -> ExactRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `(-1)^e`.
pub fn sign_pow(e: i64) -> ExactRational {
    if e.rem_euclid(2) == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &ExactRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_matches_pascal_rows() {
        let mut row = vec![BigInt::one()];
        for n in 0..=43u64 {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), expected, "C({n},{k})");
            }
            assert!(binomial(n, n + 1).is_zero());
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn powers_of_two_and_signs() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), rat(1, 4));
        assert_eq!(sign_pow(-3), int(-1));
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
