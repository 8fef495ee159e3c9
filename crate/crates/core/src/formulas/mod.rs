//! Closed forms for the Mahler measures of the three families and the
//! rational coefficients behind them.
//!
//! Each evaluator returns a [`MahlerResult`]: `π^k · m(P) = combination`,
//! with `k` kept separate so every coefficient stays rational.

mod closed_forms;
mod coefficients;
mod printed;
mod tables;

use std::fmt;
use std::str::FromStr;

use crate::error::{ensure, Error, Result};
use crate::special::{combination_value, pi, HighPrecisionReal, Precision, ZetaCombination};

pub use closed_forms::{evaluate, family1, family2, family3, family3_with, BinomialReading};
pub use coefficients::{coeff_a, coeff_b, coefficient_identity, CoefficientIdentity};
pub use printed::printed_rows;
pub use tables::{reproduce_tables, TableRow};

/// One of the three polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `1 + α z`
    I,
    /// `(1 + x) + α (1 + y) z`
    II,
    /// `1 + α x + (1 − α) y`
    III,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::I, Family::II, Family::III];

    /// Smallest admissible number of transforms.
    pub fn min_transforms(self) -> u32 {
        match self {
            Family::II => 0,
            Family::I | Family::III => 1,
        }
    }

    /// Torus dimension of the base polynomial before any substitution.
    pub fn base_variables(self) -> u32 {
        match self {
            Family::I => 1,
            Family::II => 3,
            Family::III => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Family::I),
            "ii" | "2" => Ok(Family::II),
            "iii" | "3" => Ok(Family::III),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}; expected i, ii or iii"))),
        }
    }
}

/// A family together with the number `n` of factors `(1 − xⱼ)/(1 + xⱼ)`
/// substituted for `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    family: Family,
    n_transforms: u32,
}

impl FamilySpec {
    pub fn new(family: Family, n_transforms: u32) -> Result<Self> {
        ensure!(
            n_transforms >= family.min_transforms(),
            UnsupportedSpec,
            "family {family} needs n >= {}",
            family.min_transforms()
        );
        Ok(FamilySpec { family, n_transforms })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n_transforms(&self) -> u32 {
        self.n_transforms
    }

    /// `n mod 2`.
    pub fn parity(&self) -> u32 {
        self.n_transforms % 2
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    /// The power of `π` multiplying `m` in the closed form.
    pub fn pi_normalization(&self) -> u32 {
        match self.family {
            Family::I => self.n_transforms,
            Family::II => self.n_transforms + 2,
            Family::III => self.n_transforms + 1,
        }
    }

    /// Number of torus variables of the substituted polynomial.
    pub fn torus_dimension(&self) -> u32 {
        self.family.base_variables() + self.n_transforms
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {} with n = {}", self.family, self.n_transforms)
    }
}

/// `π^{pi_normalization} · m(P) = combination`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MahlerResult {
    pub spec: FamilySpec,
    pub pi_normalization: u32,
    pub combination: ZetaCombination,
}

impl MahlerResult {
    /// Weight every term should carry: one more than the power of `π` on
    /// the left.
    pub fn total_weight(&self) -> u32 {
        self.pi_normalization + 1
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.combination.weights().iter().all(|&w| w == self.total_weight())
    }

    /// Numerical value of the right-hand side.
    pub fn combination_value(&self, precision: Precision) -> Result<HighPrecisionReal> {
        combination_value(&self.combination, precision)
    }

    /// Numerical value of `m(P)` itself.
    pub fn measure(&self, precision: Precision) -> Result<HighPrecisionReal> {
        self.combination_value(precision)?.div(&pi(precision).pow(self.pi_normalization))
    }
}

impl fmt::Display for MahlerResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_normalization {
            0 => write!(f, "m = {}", self.combination),
            1 => write!(f, "π·m = {}", self.combination),
            k => write!(f, "π^{k}·m = {}", self.combination),
        }
    }
}
