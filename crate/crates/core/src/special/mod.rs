//! High-precision special values.
//!
//! Numbers are carried as binary fixed-point big integers at a precision
//! chosen by an explicit [`Precision`] argument; nothing here reads global
//! state. Each result is a [`HighPrecisionReal`] with an error bound marked
//! either rigorous or heuristic.
//!
//! Symbolic results live in [`ZetaCombination`], a rational combination of
//! basis constants that is kept in a canonical form so equality is exact.

mod combination;
mod constants;
mod fixed;
mod polylog;
mod reduction;
mod series;
mod store;
mod value;

pub use combination::{combination_value, combination_value_with, ConstantBasisElement, ConstantKind, ZetaCombination};
pub use constants::{
    dirichlet_eta, dirichlet_l_chi4, dirichlet_l_chi4_by_series, l_chi4_odd_coefficient, log2, pi,
    rational_times_pi_power, zeta, zeta_by_series, zeta_even_coefficient,
};
pub use polylog::{
    li_single, li_single_by_series, multiple_polylog, multiple_polylog_partial_sum, script_l_double,
    script_l_single, UnitPoint,
};
pub use reduction::*;
pub use store::ConstantStore;
pub use value::{BoundKind, HighPrecisionComplex, HighPrecisionReal, Precision, MAX_DIGITS};
