//! Report, counts and literal-entropy files.
//!
//! Report numbers are written with exactly 11 fractional digits, so a parsed
//! report re-serializes byte-for-byte.

use crate::contexts::Convention;
use crate::entropy::{EntropyEntries, EntropyReport};
use crate::error::{Error, Result};
use crate::sampler::CountsRecord;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;
use std::collections::BTreeMap;
use std::path::Path;

pub const REPORT_DIGITS: usize = 11;

/// Rounds through the report text format.
pub fn round_report(x: f64) -> f64 {
    format!("{x:.REPORT_DIGITS$}").parse().expect("formatted float parses")
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(transparent)]
struct Fixed(f64);

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.REPORT_DIGITS$}", self.0))
            .map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Serialize, Deserialize)]
struct ReportFile {
    h_singles: BTreeMap<String, Fixed>,
    h_pairs: BTreeMap<String, Fixed>,
    m_value: Fixed,
    convention: Convention,
    lp_feasible: Option<bool>,
    flags: Vec<String>,
}

pub fn report_to_json(report: &EntropyReport) -> String {
    let fixed = |m: &BTreeMap<String, f64>| m.iter().map(|(k, v)| (k.clone(), Fixed(*v))).collect();
    let file = ReportFile {
        h_singles: fixed(&report.h_singles),
        h_pairs: fixed(&report.h_pairs),
        m_value: Fixed(report.m_value),
        convention: report.convention,
        lp_feasible: report.lp_feasible,
        flags: report.flags.clone(),
    };
    serde_json::to_string_pretty(&file).expect("report serializes")
}

pub fn report_from_json(text: &str) -> Result<EntropyReport> {
    let file: ReportFile = serde_json::from_str(text)?;
    let plain = |m: BTreeMap<String, Fixed>| m.into_iter().map(|(k, v)| (k, v.0)).collect();
    Ok(EntropyReport {
        h_singles: plain(file.h_singles),
        h_pairs: plain(file.h_pairs),
        m_value: file.m_value.0,
        convention: file.convention,
        lp_feasible: file.lp_feasible,
        flags: file.flags,
    })
}

pub fn write_report(report: &EntropyReport, path: &Path) -> Result<()> {
    std::fs::write(path, report_to_json(report) + "\n")?;
    Ok(())
}

pub fn read_report(path: &Path) -> Result<EntropyReport> {
    report_from_json(&std::fs::read_to_string(path)?)
}

/// `{"h_singles": {...}, "h_pairs": {...}}`; any report file also qualifies.
#[derive(Deserialize)]
struct LiteralFile {
    h_singles: BTreeMap<String, f64>,
    h_pairs: BTreeMap<String, f64>,
}

pub fn literal_entropies_from_json(text: &str) -> Result<EntropyEntries> {
    let file: LiteralFile = serde_json::from_str(text)?;
    let mut all = file.h_pairs;
    all.extend(file.h_singles);
    Ok(all)
}

pub fn read_literal_entropies(path: &Path) -> Result<EntropyEntries> {
    literal_entropies_from_json(&std::fs::read_to_string(path)?)
}

pub fn counts_from_json(text: &str) -> Result<CountsRecord> {
    let record: CountsRecord = serde_json::from_str(text)?;
    if record.total() != record.shots {
        return Err(Error::InvalidDistribution(format!(
            "counts sum to {} but shots = {}",
            record.total(),
            record.shots
        )));
    }
    Ok(record)
}

pub fn read_counts(path: &Path) -> Result<CountsRecord> {
    counts_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_counts(record: &CountsRecord, path: &Path) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(record)? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_report(values: &[f64; 8]) -> EntropyReport {
        let mut r = EntropyReport::from_cycle(&values[3..], &values[..3], Convention::Coarse).unwrap();
        r.lp_feasible = Some(true);
        r.flags.push("note".into());
        r
    }

    #[test]
    fn writes_eleven_digits_and_exact_keys() {
        let text = report_to_json(&sample_report(&[1.0, 0.5, 0.25, 1.0, 1.0, 1.0, 1.0, 1.0]));
        assert!(text.contains("\"X2\": 1.00000000000"));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        keys.sort();
        assert_eq!(keys, ["convention", "flags", "h_pairs", "h_singles", "lp_feasible", "m_value"]);
    }

    proptest! {
        #[test]
        fn report_text_is_a_fixed_point(values in prop::array::uniform8(0.0f64..2.0)) {
            let first = report_to_json(&sample_report(&values));
            let parsed = report_from_json(&first).unwrap();
            prop_assert_eq!(report_to_json(&parsed), first);
            prop_assert_eq!(parsed.m_value, round_report(sample_report(&values).m_value));
            for (k, v) in &parsed.h_pairs {
                let again = report_from_json(&report_to_json(&parsed)).unwrap();
                prop_assert_eq!(again.h_pairs[k].to_bits(), v.to_bits());
            }
        }
    }

    #[test]
    fn counts_shot_total_checked() {
        let text = r#"{"context": ["XX"], "shots": 10, "counts": {"00": 4, "10": 5}}"#;
        assert!(counts_from_json(text).is_err());
        let text = r#"{"context": ["XX"], "shots": 9, "counts": {"00": 4, "10": 5}}"#;
        assert_eq!(counts_from_json(text).unwrap().total(), 9);
    }

    #[test]
    fn literal_file_merges_sections() {
        let text = r#"{"h_singles": {"X2": 1.0}, "h_pairs": {"X1X2": 2.0}}"#;
        let e = literal_entropies_from_json(text).unwrap();
        assert_eq!(e["X2"], 1.0);
        assert_eq!(e["X1X2"], 2.0);
    }
}
