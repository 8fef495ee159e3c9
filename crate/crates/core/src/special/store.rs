//! A persistent cache of high-precision constants.
//!
//! The file is UTF-8 text. The first line is the header
//! `# mahler-constants v1`; every other non-empty line is a record
//!
//! ```text
//! kind arg pi_power digits value
//! ```
//!
//! for example `zeta 3 0 50 1.20205690315959428539973816151144999076498629234`.
//! `digits` is the number of decimal places the value is trusted to. Records
//! are only ever appended; when a key appears more than once the record with
//! the most digits wins. A lookup hits when the stored digits cover the
//! requested precision.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use super::combination::ConstantBasisElement;
use super::value::{HighPrecisionReal, Precision};
use crate::error::{Error, Result};

pub const STORE_HEADER: &str = "# mahler-constants v1";

/// One line of the store.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoreRecord {
    pub element: ConstantBasisElement,
    pub digits: u32,
    pub value: String,
}

impl fmt::Display for StoreRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.element;
        write!(f, "{} {} {} {} {}", e.kind, e.arg, e.pi_power, self.digits, self.value)
    }
}

impl StoreRecord {
    pub fn parse(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [kind, arg, pi_power, digits, value] = fields[..] else {
            return Err(Error::Store(format!("expected 5 fields, got {}: {line:?}", fields.len())));
        };
        let number = |s: &str, what: &str| {
            s.parse::<u32>().map_err(|_| Error::Store(format!("bad {what} {s:?} in {line:?}")))
        };
        let element = ConstantBasisElement::new(kind.parse()?, number(arg, "arg")?, number(pi_power, "pi_power")?)
            .map_err(|e| Error::Store(e.to_string()))?;
        let digits = number(digits, "digits")?;
        if HighPrecisionReal::parse(value, Precision::new(digits.clamp(1, super::MAX_DIGITS))?).is_none() {
            return Err(Error::Store(format!("bad decimal value {value:?}")));
        }
        Ok(StoreRecord { element, digits, value: value.to_string() })
    }
}

/// Thread-safe constant cache, optionally backed by a file.
///
/// Reads take a shared lock; inserts serialize on a writer lock so that
/// appends to the file never interleave.
#[derive(Debug, Default)]
pub struct ConstantStore {
    path: Option<PathBuf>,
    entries: RwLock<BTreeMap<ConstantBasisElement, StoreRecord>>,
    writer: Mutex<()>,
}

impl ConstantStore {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens (or prepares to create) the store at `path`.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = BTreeMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            let mut lines = reader.lines().enumerate();
            if let Some((_, header)) = lines.next() {
                if header?.trim() != STORE_HEADER {
                    return Err(Error::Store(format!("{}: missing header {STORE_HEADER:?}", path.display())));
                }
            }
            for (i, line) in lines {
                let line = line?;
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let record = StoreRecord::parse(line)
                    .map_err(|e| Error::Store(format!("{}:{}: {e}", path.display(), i + 1)))?;
                keep_best(&mut entries, record);
            }
        }
        Ok(ConstantStore { path: Some(path), entries: RwLock::new(entries), writer: Mutex::new(()) })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// All records, in canonical element order.
    pub fn records(&self) -> Vec<StoreRecord> {
        self.entries.read().expect("store lock").values().cloned().collect()
    }

    /// The stored value, if it carries at least `precision.digits()` digits.
    pub fn lookup(&self, element: &ConstantBasisElement, precision: Precision) -> Option<HighPrecisionReal> {
        let entries = self.entries.read().expect("store lock");
        let record = entries.get(element)?;
        if record.digits < precision.digits() {
            return None;
        }
        HighPrecisionReal::parse(&record.value, precision)
    }

    /// Digits stored for `element`, if any.
    pub fn stored_digits(&self, element: &ConstantBasisElement) -> Option<u32> {
        self.entries.read().expect("store lock").get(element).map(|r| r.digits)
    }

    /// Stores a computed value, trusting as many digits as its error bound
    /// supports. Returns whether the store changed.
    pub fn insert_value(&self, element: &ConstantBasisElement, value: &HighPrecisionReal) -> Result<bool> {
        let digits = value.correct_digits().min(super::MAX_DIGITS);
        if digits == 0 {
            return Ok(false);
        }
        self.insert(StoreRecord { element: *element, digits, value: value.to_decimal(digits) })
    }

    /// Adds a record unless one with at least as many digits exists.
    pub fn insert(&self, record: StoreRecord) -> Result<bool> {
        let _guard = self.writer.lock().expect("store writer");
        if self.stored_digits(&record.element).is_some_and(|d| d >= record.digits) {
            return Ok(false);
        }
        if let Some(path) = &self.path {
            let fresh = !path.exists() || std::fs::metadata(path)?.len() == 0;
            let mut file = OpenOptions::new().create(true).append(true).open(path)?;
            if fresh {
                writeln!(file, "{STORE_HEADER}")?;
            }
            writeln!(file, "{record}")?;
        }
        keep_best(&mut self.entries.write().expect("store lock"), record);
        Ok(true)
    }

    /// Computes and stores the constants the closed forms use: odd zeta
    /// values `ζ(3..=21)`, even L-values `L(χ₋₄, 2..=20)`, `log 2`, `π` and
    /// `i𝓛_{3,b}(i,i)` for odd `b ≤ l3_max`. Returns the number of records
    /// added.
    pub fn warm(&self, precision: Precision, l3_max: u32) -> Result<usize> {
        let mut elements: Vec<ConstantBasisElement> = Vec::new();
        elements.extend((3..=21).step_by(2).map(ConstantBasisElement::zeta));
        elements.extend((2..=20).step_by(2).map(ConstantBasisElement::l_chi4));
        elements.push(ConstantBasisElement::log2());
        elements.push(ConstantBasisElement::pi_pow(1));
        elements.extend((1..=l3_max).step_by(2).map(ConstantBasisElement::l3b_ii));
        let mut added = 0;
        for e in elements {
            if self.stored_digits(&e).is_some_and(|d| d >= precision.digits()) {
                continue;
            }
            let single = super::ZetaCombination::term(crate::exact::int(1), e);
            let value = super::combination_value(&single, precision)?;
            added += usize::from(self.insert_value(&e, &value)?);
        }
        Ok(added)
    }
}

fn keep_best(entries: &mut BTreeMap<ConstantBasisElement, StoreRecord>, record: StoreRecord) {
    match entries.get(&record.element) {
        Some(old) if old.digits >= record.digits => {}
        _ => {
            entries.insert(record.element, record);
        }
    }
}
