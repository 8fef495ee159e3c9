use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_rational, ExactRational};

/// An element `re + i·im` of ℚ(i), with exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: ExactRational,
    pub im: ExactRational,
}

impl GaussianRational {
    pub fn new(re: ExactRational, im: ExactRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactRational) -> Self {
        Self::new(re, ExactRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(ExactRational::zero(), ExactRational::one())
    }

    pub fn zero() -> Self {
        Self::real(ExactRational::zero())
    }

    pub fn one() -> Self {
        Self::real(ExactRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `i^e`, resolved without multiplication.
    pub fn i_pow(e: u64) -> Self {
        match e % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(&self.re * c, &self.im * c)
    }
}

impl From<ExactRational> for GaussianRational {
    fn from(re: ExactRational) -> Self {
        Self::real(re)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}·i", format_rational(&self.im)),
            (false, false) => write!(
                f,
                "{} + {}·i",
                format_rational(&self.re),
                format_rational(&self.im)
            ),
        }
    }
}
