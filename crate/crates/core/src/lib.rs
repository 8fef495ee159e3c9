//! Closed forms for the Mahler measures of three n-variable polynomial
//! families, together with the exact and numerical machinery needed to derive
//! and cross-check them.
//!
//! The families are obtained from a base polynomial `P_α` by substituting
//! `α ↦ ∏ (1 - x_j)/(1 + x_j)`:
//!
//! * family I:   `1 + α z`
//! * family II:  `(1 + x) + α (1 + y) z`
//! * family III: `1 + α x + (1 - α) y`
//!
//! Every closed form is a [`ZetaCombination`]: a finite rational combination of
//! `π^a ζ(b)`, `π^a L(χ₋₄, b)`, `π^a log 2` and `π^a · i𝓛_{3,b}(i,i)`.
//!
//! The crate is split into four layers:
//!
//! * [`exact`] - Bernoulli and Euler numbers, elementary symmetric functions,
//!   the `P_k` polynomial family and the identities that tie them together.
//! * [`special`] - fixed-point high-precision evaluation of zeta values,
//!   Dirichlet L-values, single and double polylogarithms at fourth roots of
//!   unity, and the exact reduction of double polylogarithms at `±1`.
//! * [`formulas`] - the six Mahler-measure closed forms and the coefficient
//!   machinery behind them.
//! * [`oracle`] - independent numerical checks: quadrature of the reduced
//!   one-dimensional integrals and quasi-Monte Carlo over the torus.
//!
//! ```
//! use mahler_measure::formulas::{family1, FamilySpec, Family};
//! use mahler_measure::exact::int;
//! use mahler_measure::special::{ConstantBasisElement, ZetaCombination};
//!
//! let result = family1(FamilySpec::new(Family::I, 2).unwrap()).unwrap();
//! assert_eq!(result.pi_normalization, 2);
//! assert_eq!(result.combination, ZetaCombination::term(int(7), ConstantBasisElement::zeta(3)));
//! ```

mod error;

pub mod exact;
pub mod formulas;
pub mod oracle;
pub mod special;

pub use error::{Error, Result};
pub use exact::{ExactRational, GaussianRational, PolyQ};
pub use formulas::{Family, FamilySpec, MahlerResult};

pub use special::{ConstantBasisElement, HighPrecisionReal, Precision, ZetaCombination};
