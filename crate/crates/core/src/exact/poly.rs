use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rational, ExactRational, GaussianRational};

/// Dense univariate polynomial over ℚ.
///
/// The coefficient vector is indexed by degree and never carries trailing
/// zeros, so the zero polynomial is the empty vector and equality is
/// coefficient-wise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<ExactRational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · x^degree`.
    pub fn monomial(c: ExactRational, degree: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * ExactRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// The polynomial with its constant coefficient removed (reduction mod x).
    pub fn without_constant(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if let Some(c) = coeffs.first_mut() {
            *c = ExactRational::zero();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, a| acc * x + a)
    }

    pub fn eval_gaussian(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs.iter().rev().fold(GaussianRational::zero(), |acc, a| {
            &(&acc * x) + &GaussianRational::real(a.clone())
        })
    }

    /// Floating-point evaluation, used by the numerical oracles.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, a| acc * x + a.to_f64().unwrap_or(f64::NAN))
    }

    /// Degrees of the nonzero monomials.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: Self) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: Self) -> PolyQ {
        &self + &rhs
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: Self) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: Self) -> PolyQ {
        &self - &rhs
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: Self) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(out)
    }
}

impl Mul for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: Self) -> PolyQ {
        &self * &rhs
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.into_iter().map(|a| -a).collect())
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in self.support().collect::<Vec<_>>().into_iter().rev() {
            let c = &self.coeffs[i];
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{}", format_rational(&mag))?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}·x", format_rational(&mag))?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{}·x^{i}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn normalizes_trailing_zeros() {
        let p = PolyQ::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(PolyQ::from_coeffs(vec![int(0)]), PolyQ::zero());
        assert_eq!(PolyQ::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        // (x + 1)(x - 1) = x^2 - 1
        let a = PolyQ::from_coeffs(vec![int(1), int(1)]);
        let b = PolyQ::from_coeffs(vec![int(-1), int(1)]);
        let p = &a * &b;
        assert_eq!(p, PolyQ::from_coeffs(vec![int(-1), int(0), int(1)]));
        assert_eq!(p.eval(&rat(1, 2)), rat(-3, 4));
        assert_eq!(p.derivative(), PolyQ::monomial(int(2), 1));
        assert_eq!(&(&a + &b) - &a, b);
        assert_eq!(
            p.eval_gaussian(&GaussianRational::i()),
            GaussianRational::real(int(-2))
        );
        assert_eq!(p.to_string(), "x^2 - 1");
        assert_eq!(PolyQ::monomial(rat(-2, 3), 3).to_string(), "-2/3·x^3");
    }
}
