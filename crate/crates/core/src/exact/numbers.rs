use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactRational;

static BERNOULLI: OnceLock<RwLock<Vec<ExactRational>>> = OnceLock::new();
static EULER: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();

/// Grow-only table lookup: readers share the lock, a miss rebuilds the table
/// to at least twice the requested length under the write lock.
pub(super) fn cached<T: Clone>(
    cell: &'static OnceLock<RwLock<Vec<T>>>,
    n: usize,
    build: impl FnOnce(usize) -> Vec<T>,
) -> T {
    let table = cell.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(v) = table.read().expect("poisoned cache").get(n) {
        return v.clone();
    }
    let mut guard = table.write().expect("poisoned cache");
    if guard.len() <= n {
        *guard = build((2 * n).max(32));
    }
    guard[n].clone()
}

/// Bernoulli number `B_n` from `x/(eˣ - 1) = Σ B_n xⁿ/n!` (so `B_1 = -1/2`).
pub fn bernoulli(n: u32) -> ExactRational {
    cached(&BERNOULLI, n as usize, akiyama_tanigawa)
}

/// Euler number `E_n` from `2eˣ/(e²ˣ + 1) = sech x = Σ E_n xⁿ/n!`.
pub fn euler_number(n: u32) -> BigInt {
    cached(&EULER, n as usize, secant_numbers)
}

// Akiyama–Tanigawa yields the B_1 = +1/2 convention; flip it afterwards.
fn akiyama_tanigawa(len: usize) -> Vec<ExactRational> {
    let mut row: Vec<ExactRational> = Vec::with_capacity(len);
    let mut out = Vec::with_capacity(len);
    for m in 0..len {
        row.push(ExactRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * ExactRational::from_integer(j.into());
        }
        out.push(row[0].clone());
    }
    if len > 1 {
        out[1] = -out[1].clone();
    }
    out
}

// Seidel's boustrophedon gives the zigzag numbers A_n; the secant numbers are
// A_{2k} and E_{2k} = (-1)^k A_{2k}.
fn secant_numbers(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut prev = vec![BigInt::one()];
    for n in 0..len {
        if n > 0 {
            let mut next = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                next[k] = &next[k - 1] + &prev[n - k];
            }
            prev = next;
        }
        let zigzag = prev[n].clone();
        out.push(match n % 4 {
            0 => zigzag,
            2 => -zigzag,
            _ => BigInt::zero(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, factorial, int, rat};

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    // Oracle: Σ_{s=0}^{k} C(k+1, s) B_s = 0 for k ≥ 1, solved forward.
    #[test]
    fn bernoulli_agrees_with_recurrence_oracle() {
        let mut oracle = vec![int(1)];
        for k in 1..=60u64 {
            let acc: ExactRational = (0..k)
                .map(|s| ExactRational::from_integer(binomial(k + 1, s)) * &oracle[s as usize])
                .sum();
            oracle.push(-acc / ExactRational::from_integer(BigInt::from(k + 1)));
        }
        for (n, b) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli(n as u32), b, "B_{n}");
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_number(0), BigInt::from(1));
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        for j in 0..30 {
            assert!(euler_number(2 * j + 1).is_zero());
        }
    }

    // Oracle: power-series division of 2eˣ/(e²ˣ+1), i.e. sech x = 1/cosh x,
    // carried out on exponential-generating coefficients.
    #[test]
    fn euler_agrees_with_series_division_oracle() {
        let order = 40usize;
        let cosh: Vec<ExactRational> = (0..=order)
            .map(|n| {
                if n % 2 == 0 {
                    ExactRational::new(BigInt::one(), factorial(n as u64))
                } else {
                    int(0)
                }
            })
            .collect();
        let mut sech = vec![int(0); order + 1];
        sech[0] = int(1);
        for n in 1..=order {
            let acc: ExactRational = (1..=n).map(|k| &cosh[k] * &sech[n - k]).sum();
            sech[n] = -acc;
        }
        for (n, c) in sech.iter().enumerate() {
            let expected = c * ExactRational::from_integer(factorial(n as u64));
            assert_eq!(ExactRational::from_integer(euler_number(n as u32)), expected, "E_{n}");
        }
    }

    #[test]
    fn caches_are_consistent_across_threads() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || (bernoulli(40 + t), euler_number(40 + 2 * t))))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let (b, e) = h.join().unwrap();
            assert_eq!(b, bernoulli(40 + t as u32));
            assert_eq!(e, euler_number(40 + 2 * t as u32));
        }
    }
}
