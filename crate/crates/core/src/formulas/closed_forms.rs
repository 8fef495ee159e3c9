//! The closed forms, one pair (even and odd number of transforms) per
//! family. Throughout, `N = ⌊n/2⌋`, `S_even(N) = (2², …, (2N−2)²)`,
//! `S_odd(N) = (1², …, (2N−1)²)`, and `s_j` is the `j`-th elementary
//! symmetric function.

use num_traits::Zero;

use super::{Family, FamilySpec, MahlerResult};
use crate::error::{ensure, Result};
use crate::exact::{
    bernoulli, binomial, elementary_symmetric_all, even_squares, factorial, int, odd_squares, pow2, sign_pow,
    ExactRational,
};
use crate::special::{ConstantBasisElement, ZetaCombination};

/// Which index the inner binomial of the family III sums selects.
///
/// The two readings `C(2(l+h), 2h)` and `C(2(l+h), 2l)` appear in
/// different displays of the same formula. They agree by the symmetry of
/// binomial coefficients, so the flag exists to make that visible rather
/// than to change any result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BinomialReading {
    #[default]
    Lower,
    Upper,
}

fn fact(n: u32) -> ExactRational {
    int(factorial(n.into()))
}

fn binom(n: u32, k: u32) -> ExactRational {
    int(binomial(n.into(), k.into()))
}

/// `s_j` of a precomputed table, zero outside it.
fn s_at(table: &[ExactRational], j: i64) -> ExactRational {
    usize::try_from(j).ok().and_then(|j| table.get(j).cloned()).unwrap_or_else(ExactRational::zero)
}

fn require(spec: FamilySpec, family: Family) -> Result<()> {
    ensure!(spec.family() == family, UnsupportedSpec, "expected family {family}, got {spec}");
    Ok(())
}

fn result(spec: FamilySpec, combination: ZetaCombination) -> MahlerResult {
    MahlerResult { spec, pi_normalization: spec.pi_normalization(), combination }
}

/// Family I.
///
/// Even `n = 2N`:
/// `π^{2N} m = 1/(2N−1)! Σ_{h=1}^{N} s_{N−h}(S_even(N)) (2h)! (2^{2h+1}−1)/2 · π^{2N−2h} ζ(2h+1)`.
///
/// Odd `n = 2N+1`:
/// `π^{2N+1} m = 1/(2N)! Σ_{h=0}^{N} s_{N−h}(S_odd(N)) (2h+1)! 2^{2h+1} · π^{2N−2h} L(χ₋₄, 2h+2)`.
pub fn family1(spec: FamilySpec) -> Result<MahlerResult> {
    require(spec, Family::I)?;
    let big_n = spec.n_transforms() / 2;
    let n_ = i64::from(big_n);
    let mut c = ZetaCombination::new();
    if spec.is_even() {
        let s = elementary_symmetric_all(&even_squares(big_n as usize - 1));
        for h in 1..=big_n {
            let coeff = s_at(&s, n_ - i64::from(h)) * fact(2 * h) * (pow2(2 * i64::from(h) + 1) - int(1))
                / int(2)
                / fact(2 * big_n - 1);
            c.add_term(coeff, ConstantBasisElement::zeta(2 * h + 1).times_pi(2 * big_n - 2 * h));
        }
    } else {
        let s = elementary_symmetric_all(&odd_squares(big_n as usize));
        for h in 0..=big_n {
            let coeff = s_at(&s, n_ - i64::from(h)) * fact(2 * h + 1) * pow2(2 * i64::from(h) + 1) / fact(2 * big_n);
            c.add_term(coeff, ConstantBasisElement::l_chi4(2 * h + 2).times_pi(2 * big_n - 2 * h));
        }
    }
    Ok(result(spec, c))
}

/// Family II.
///
/// `n = 0` is the base polynomial `1 + x + (1 + y) z`, with
/// `π² m = 7/2 ζ(3)`; the even formula has an empty sum there and does not
/// cover it.
///
/// Even `n = 2N ≥ 2`:
/// `π^{2N+2} m = 1/(2N−1)! Σ_{h=1}^{N} (2h+2)! (2^{2h+3}−1)/8 · π^{2N−2h} ζ(2h+3)
///   · Σ_{l=0}^{N−h} s_{N−h−l}(S_even(N)) C(2(l+h), 2h) (−1)ˡ 2^{2l} B_{2l}/(l+h)`.
///
/// Odd `n = 2N+1`:
/// `π^{2N+3} m = 1/(2N)! Σ_{h=0}^{N} s_{N−h}(S_odd(N)) 2^{2h+1}
///   ((2h+1)! π^{2N−2h+2} L(χ₋₄, 2h+2) + (2h)! π^{2N−2h} i𝓛_{3,2h+1}(i,i))`.
pub fn family2(spec: FamilySpec) -> Result<MahlerResult> {
    require(spec, Family::II)?;
    let big_n = spec.n_transforms() / 2;
    let n_ = i64::from(big_n);
    let mut c = ZetaCombination::new();
    if spec.n_transforms() == 0 {
        c.add_term(ExactRational::new(7.into(), 2.into()), ConstantBasisElement::zeta(3));
    } else if spec.is_even() {
        let s = elementary_symmetric_all(&even_squares(big_n as usize - 1));
        for h in 1..=big_n {
            let inner: ExactRational = (0..=big_n - h)
                .map(|l| {
                    s_at(&s, n_ - i64::from(h + l)) * binom(2 * (l + h), 2 * h) * sign_pow(l.into())
                        * pow2(2 * i64::from(l))
                        * bernoulli(2 * l)
                        / int(l + h)
                })
                .sum();
            let coeff = fact(2 * h + 2) * (pow2(2 * i64::from(h) + 3) - int(1)) / int(8) * inner / fact(2 * big_n - 1);
            c.add_term(coeff, ConstantBasisElement::zeta(2 * h + 3).times_pi(2 * big_n - 2 * h));
        }
    } else {
        let s = elementary_symmetric_all(&odd_squares(big_n as usize));
        for h in 0..=big_n {
            let base = s_at(&s, n_ - i64::from(h)) * pow2(2 * i64::from(h) + 1) / fact(2 * big_n);
            c.add_term(
                &base * fact(2 * h + 1),
                ConstantBasisElement::l_chi4(2 * h + 2).times_pi(2 * big_n - 2 * h + 2),
            );
            c.add_term(base * fact(2 * h), ConstantBasisElement::l3b_ii(2 * h + 1).times_pi(2 * big_n - 2 * h));
        }
    }
    Ok(result(spec, c))
}

/// Family III with the default binomial reading.
pub fn family3(spec: FamilySpec) -> Result<MahlerResult> {
    family3_with(spec, BinomialReading::default())
}

/// Family III.
///
/// With `T(h) = Σ_{l=0}^{N−h} s_{N−h−l}(S_even(N)) C(2(l+h), 2l) (−1)^{l+1} 2^{2l} (2^{2l−1}−1) B_{2l}/(l+h)`:
///
/// Even `n = 2N`:
/// `π^{2N+1} m = π^{2N+1}/2 log 2 + 1/(2N−1)! Σ_{h=1}^{N} (2h)! (2^{2h+1}−1)/4
///   (s_{N−h}(S_even(N)) + T(h)) π^{2N−2h+1} ζ(2h+1)`.
///
/// Odd `n = 2N+1`:
/// `π^{2N+2} m = π^{2N+2}/2 log 2
///   + 1/(2N+1)! Σ_{h=0}^{N} s_{N−h}(4, 16, …, (2N)²) (2h+2)! (2^{2h+3}−1)/4 π^{2N−2h} ζ(2h+3)
///   + 1/(2N−1)! Σ_{h=1}^{N} (2h)! (2^{2h+1}−1)/4 T(h) π^{2N−2h+2} ζ(2h+1)`.
pub fn family3_with(spec: FamilySpec, reading: BinomialReading) -> Result<MahlerResult> {
    require(spec, Family::III)?;
    let big_n = spec.n_transforms() / 2;
    let n_ = i64::from(big_n);
    let s_even = elementary_symmetric_all(&even_squares((big_n as usize).saturating_sub(1)));
    let t = |h: u32| -> ExactRational {
        (0..=big_n - h)
            .map(|l| {
                let lower = match reading {
                    BinomialReading::Lower => 2 * l,
                    BinomialReading::Upper => 2 * h,
                };
                let l2 = 2 * i64::from(l);
                s_at(&s_even, n_ - i64::from(h + l)) * binom(2 * (l + h), lower) * sign_pow(i64::from(l) + 1)
                    * pow2(l2)
                    * (pow2(l2 - 1) - int(1))
                    * bernoulli(2 * l)
                    / int(l + h)
            })
            .sum()
    };
    let zeta_weight = |h: u32| fact(2 * h) * (pow2(2 * i64::from(h) + 1) - int(1)) / int(4);
    let mut c = ZetaCombination::new();
    let half = ExactRational::new(1.into(), 2.into());
    if spec.is_even() {
        c.add_term(half, ConstantBasisElement::log2().times_pi(2 * big_n + 1));
        for h in 1..=big_n {
            let coeff = zeta_weight(h) * (s_at(&s_even, n_ - i64::from(h)) + t(h)) / fact(2 * big_n - 1);
            c.add_term(coeff, ConstantBasisElement::zeta(2 * h + 1).times_pi(2 * big_n - 2 * h + 1));
        }
    } else {
        c.add_term(half, ConstantBasisElement::log2().times_pi(2 * big_n + 2));
        let s_full = elementary_symmetric_all(&even_squares(big_n as usize));
        for h in 0..=big_n {
            let coeff = s_at(&s_full, n_ - i64::from(h)) * fact(2 * h + 2) * (pow2(2 * i64::from(h) + 3) - int(1))
                / int(4)
                / fact(2 * big_n + 1);
            c.add_term(coeff, ConstantBasisElement::zeta(2 * h + 3).times_pi(2 * big_n - 2 * h));
        }
        for h in 1..=big_n {
            let coeff = zeta_weight(h) * t(h) / fact(2 * big_n - 1);
            c.add_term(coeff, ConstantBasisElement::zeta(2 * h + 1).times_pi(2 * big_n - 2 * h + 2));
        }
    }
    Ok(result(spec, c))
}

/// Dispatches on the family.
pub fn evaluate(spec: FamilySpec) -> Result<MahlerResult> {
    match spec.family() {
        Family::I => family1(spec),
        Family::II => family2(spec),
        Family::III => family3(spec),
    }
}
