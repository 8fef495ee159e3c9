//! The JSON record printed by `mahler eval --format json`.

use mahler_measure::exact::ExactRational;
use mahler_measure::special::{ConstantBasisElement, ConstantKind};
use mahler_measure::{Error, Family, FamilySpec, MahlerResult, Result, ZetaCombination};
use serde::{Deserialize, Serialize};

/// Family and number of transforms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub family: String,
    pub n_transforms: u32,
}

/// One term `coeff_num/coeff_den · π^{pi_power} · kind(arg)`.
///
/// Coefficients are decimal strings so arbitrarily large integers survive
/// the trip through JSON. `arg` is `null` for `log2` and `one`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub kind: String,
    pub arg: Option<u32>,
    pub pi_power: u32,
    pub coeff_num: String,
    pub coeff_den: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub spec: SpecRecord,
    pub pi_normalization: u32,
    pub combination: Vec<TermRecord>,
    /// `π^{pi_normalization} · m`, i.e. the value of the combination.
    pub numeric_value: String,
    pub digits: u32,
    /// `m` from the independent oracle, when one was run.
    pub oracle_value: Option<String>,
    pub oracle_method: Option<String>,
    pub agreement: Option<bool>,
}

fn has_arg(kind: ConstantKind) -> bool {
    !matches!(kind, ConstantKind::Log2 | ConstantKind::One)
}

pub fn terms_of(c: &ZetaCombination) -> Vec<TermRecord> {
    c.iter()
        .map(|(e, q)| TermRecord {
            kind: e.kind.name().to_string(),
            arg: has_arg(e.kind).then_some(e.arg),
            pi_power: e.pi_power,
            coeff_num: q.numer().to_string(),
            coeff_den: q.denom().to_string(),
        })
        .collect()
}

pub fn combination_of(terms: &[TermRecord]) -> Result<ZetaCombination> {
    terms
        .iter()
        .map(|t| {
            let kind: ConstantKind = t.kind.parse()?;
            let element = ConstantBasisElement::new(kind, t.arg.unwrap_or(0), t.pi_power)?;
            let parse = |s: &str| s.parse().map_err(|_| Error::InvalidArgument(format!("bad integer {s:?}")));
            let den = parse(&t.coeff_den)?;
            if den == 0.into() {
                return Err(Error::InvalidArgument("zero denominator".into()));
            }
            Ok(ZetaCombination::term(ExactRational::new(parse(&t.coeff_num)?, den), element))
        })
        .sum()
}

impl OutputRecord {
    pub fn new(result: &MahlerResult, numeric_value: String, digits: u32) -> Self {
        OutputRecord {
            spec: SpecRecord { family: result.spec.family().to_string(), n_transforms: result.spec.n_transforms() },
            pi_normalization: result.pi_normalization,
            combination: terms_of(&result.combination),
            numeric_value,
            digits,
            oracle_value: None,
            oracle_method: None,
            agreement: None,
        }
    }

    pub fn family_spec(&self) -> Result<FamilySpec> {
        FamilySpec::new(self.spec.family.parse::<Family>()?, self.spec.n_transforms)
    }

    /// Rebuilds the exact result the record was printed from.
    pub fn to_result(&self) -> Result<MahlerResult> {
        Ok(MahlerResult {
            spec: self.family_spec()?,
            pi_normalization: self.pi_normalization,
            combination: combination_of(&self.combination)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mahler_measure::formulas::evaluate;

    #[test]
    fn exact_round_trip() {
        for (f, n) in [(Family::I, 8), (Family::II, 3), (Family::III, 5), (Family::II, 0)] {
            let result = evaluate(FamilySpec::new(f, n).unwrap()).unwrap();
            let record = OutputRecord::new(&result, "0".into(), 10);
            let text = serde_json::to_string(&record).unwrap();
            let back: OutputRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, record);
            assert_eq!(back.to_result().unwrap(), result);
        }
    }

    #[test]
    fn family_iii_terms() {
        let result = evaluate(FamilySpec::new(Family::III, 1).unwrap()).unwrap();
        let terms = terms_of(&result.combination);
        let compact: Vec<_> = terms
            .iter()
            .map(|t| (t.kind.as_str(), t.arg, t.pi_power, t.coeff_num.as_str(), t.coeff_den.as_str()))
            .collect();
        assert!(compact.contains(&("zeta", Some(3), 0, "7", "2")));
        assert!(compact.contains(&("log2", None, 2, "1", "2")));
    }

    #[test]
    fn rejects_bad_terms() {
        let bad = TermRecord {
            kind: "zeta".into(),
            arg: Some(3),
            pi_power: 0,
            coeff_num: "1".into(),
            coeff_den: "0".into(),
        };
        assert!(combination_of(&[bad]).is_err());
    }
}
