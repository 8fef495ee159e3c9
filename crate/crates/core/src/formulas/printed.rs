//! The published table of first values, transcribed term by term exactly
//! as printed, including the two rows that do not match the closed forms.
//! These rows are reference data: they are never generated from the
//! formulas.

use super::{Family, FamilySpec};
use crate::exact::rat;
use crate::special::{ConstantBasisElement, ConstantKind, ZetaCombination};

use ConstantKind::{LChi4 as L, L3bIi as IL, Log2 as LOG2, Zeta as Z};

/// `(family, n, terms)` with each term `(kind, argument, π power, numerator, denominator)`.
type Row = (Family, u32, &'static [(ConstantKind, u32, u32, i64, i64)]);

const ROWS: &[Row] = &[
    (Family::I, 2, &[(Z, 3, 0, 7, 1)]),
    (Family::I, 4, &[(Z, 5, 0, 62, 1), (Z, 3, 2, 14, 3)]),
    (Family::I, 6, &[(Z, 7, 0, 381, 1), (Z, 5, 2, 62, 1), (Z, 3, 4, 56, 15)]),
    (Family::I, 8, &[(Z, 9, 0, 2044, 1), (Z, 7, 2, 508, 1), (Z, 5, 4, 868, 15), (Z, 3, 6, 16, 5)]),
    (Family::I, 1, &[(L, 2, 0, 2, 1)]),
    (Family::I, 3, &[(L, 4, 0, 24, 1), (L, 2, 2, 1, 1)]),
    (Family::I, 5, &[(L, 6, 0, 160, 1), (L, 4, 2, 20, 1), (L, 2, 4, 3, 4)]),
    (Family::I, 7, &[(L, 8, 0, 896, 1), (L, 6, 2, 560, 3), (L, 4, 4, 259, 15), (L, 2, 6, 5, 8)]),
    (Family::II, 0, &[(Z, 3, 0, 7, 2)]),
    (Family::II, 2, &[(Z, 5, 0, 93, 1)]),
    (Family::II, 4, &[(Z, 7, 0, 1905, 2), (Z, 5, 2, 31, 1)]),
    (Family::II, 6, &[(Z, 9, 0, 7154, 1), (Z, 7, 2, 635, 1), (Z, 5, 4, 248, 15)]),
    (Family::II, 1, &[(L, 2, 2, 2, 1), (IL, 1, 0, 2, 1)]),
    (Family::II, 3, &[(L, 4, 2, 24, 1), (L, 2, 4, 1, 1), (IL, 3, 0, 16, 1), (IL, 1, 1, 4, 1)]),
    (Family::III, 2, &[(Z, 3, 1, 21, 4), (LOG2, 0, 3, 1, 2)]),
    (Family::III, 4, &[(Z, 5, 1, 155, 4), (Z, 3, 3, 14, 3), (LOG2, 0, 5, 1, 2)]),
    (Family::III, 1, &[(Z, 3, 0, 7, 2), (LOG2, 0, 2, 1, 2)]),
    (Family::III, 3, &[(Z, 5, 0, 31, 1), (Z, 3, 2, 7, 3), (LOG2, 0, 4, 1, 2)]),
];

/// Every printed row as `(spec, right-hand side)`, in table order.
pub fn printed_rows() -> Vec<(FamilySpec, ZetaCombination)> {
    ROWS.iter()
        .map(|&(family, n, terms)| {
            let spec = FamilySpec::new(family, n).expect("printed rows use valid specs");
            let combination = terms
                .iter()
                .map(|&(kind, arg, pi_power, num, den)| {
                    let element = ConstantBasisElement::new(kind, arg, pi_power).expect("printed rows use valid constants");
                    ZetaCombination::term(rat(num, den), element)
                })
                .sum();
            (spec, combination)
        })
        .collect()
}
