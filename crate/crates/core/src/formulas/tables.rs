use super::{evaluate, printed_rows, FamilySpec, MahlerResult};
use crate::error::Result;
use crate::special::ZetaCombination;

/// A printed row next to the value the closed form produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub spec: FamilySpec,
    pub computed: MahlerResult,
    pub printed: ZetaCombination,
    pub matches: bool,
}

impl TableRow {
    /// `computed − printed`, zero exactly when the row matches.
    pub fn discrepancy(&self) -> ZetaCombination {
        &self.computed.combination - &self.printed
    }
}

/// Evaluates every printed row and compares exactly.
pub fn reproduce_tables() -> Result<Vec<TableRow>> {
    printed_rows()
        .into_iter()
        .map(|(spec, printed)| {
            let computed = evaluate(spec)?;
            let matches = computed.combination == printed;
            Ok(TableRow { spec, computed, printed, matches })
        })
        .collect()
}
