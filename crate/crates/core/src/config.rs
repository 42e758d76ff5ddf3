//! JSON experiment configuration.
//!
//! ```json
//! {
//!   "observable_set": "table1",
//!   "state": { "family": "s1", "alpha": 2.9306, "beta": 2.9306 },
//!   "convention": "fine",
//!   "shots": 8192,
//!   "seed": 7,
//!   "noise": { "epsilon": 0.05, "readout_flip": [[[0.98, 0.02], [0.03, 0.97]], [[1, 0], [0, 1]]] },
//!   "outputs": { "report": "report.json", "format": "json" }
//! }
//! ```
//!
//! `observable_set` is `"table1"`, `"table2"` or a list of Pauli strings;
//! `shots` is a positive integer or `"exact"`; an explicit state uses
//! `"family": "explicit"` with `"amplitudes": [[re, im], ...]`.

use crate::contexts::Convention;
use crate::error::{Error, Result};
use crate::noise::NoiseModel;
use crate::pauli::{table1_observables, table2_observables, verify_cycle, PauliString};
use crate::reference::{ALPHA, BETA_S1, BETA_S2, SHOTS};
use crate::statevec::{StateFamily, StatePrepSpec};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObservableSet {
    Preset(String),
    Custom(Vec<String>),
}

impl ObservableSet {
    pub fn resolve(&self) -> Result<Vec<PauliString>> {
        let set = match self {
            ObservableSet::Preset(name) => match name.to_ascii_lowercase().as_str() {
                "table1" => table1_observables(),
                "table2" => table2_observables(),
                other => return Err(Error::Config(format!("unknown observable set {other:?}"))),
            },
            ObservableSet::Custom(list) => list
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<PauliString>>>()?,
        };
        let report = verify_cycle(&set)?;
        if let Some((i, j)) = report.failing_pairs().first() {
            return Err(Error::NonCommuting(set[*i].to_string(), set[*j].to_string()));
        }
        Ok(set)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateConfig {
    pub family: StateFamily,
    #[serde(default)]
    pub alpha: f64,
    #[serde(default)]
    pub beta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
}

impl StateConfig {
    pub fn to_spec(&self) -> Result<StatePrepSpec> {
        Ok(match self.family {
            StateFamily::S1 => StatePrepSpec::s1(self.alpha, self.beta),
            StateFamily::S2 => StatePrepSpec::s2(self.alpha, self.beta),
            StateFamily::Explicit => {
                let amps = self
                    .amplitudes
                    .as_ref()
                    .ok_or_else(|| Error::Config("explicit state needs \"amplitudes\"".into()))?;
                StatePrepSpec::explicit(amps.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
            }
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Shots {
    #[default]
    Exact,
    Count(u64),
}

impl Shots {
    pub fn parse(text: &str) -> Result<Self> {
        if text.eq_ignore_ascii_case("exact") {
            return Ok(Shots::Exact);
        }
        match text.parse::<u64>() {
            Ok(0) | Err(_) => Err(Error::Config(format!("shots must be a positive integer or \"exact\", got {text:?}"))),
            Ok(n) => Ok(Shots::Count(n)),
        }
    }
}

impl Serialize for Shots {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Shots::Exact => s.serialize_str("exact"),
            Shots::Count(n) => s.serialize_u64(*n),
        }
    }
}

impl<'de> Deserialize<'de> for Shots {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(u64),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Count(0) => Err(serde::de::Error::custom("shots must be positive")),
            Raw::Count(n) => Ok(Shots::Count(n)),
            Raw::Word(w) => Shots::parse(&w).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputsConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
    #[serde(default = "default_format")]
    pub format: String,
}

fn default_format() -> String {
    "json".into()
}

impl Default for OutputsConfig {
    fn default() -> Self {
        Self {
            report: None,
            format: default_format(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub observable_set: ObservableSet,
    pub state: StateConfig,
    #[serde(default)]
    pub convention: Convention,
    #[serde(default)]
    pub shots: Shots,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise: Option<NoiseModel>,
    #[serde(default)]
    pub outputs: OutputsConfig,
}

impl ExperimentConfig {
    /// First hardware run: `s1(2.9306, 2.9306)` on ZZ, XX, XI, XZ, IZ.
    pub fn preset_s1_table1() -> Self {
        Self::preset("table1", StateFamily::S1, ALPHA, BETA_S1)
    }

    /// Second hardware run: `s2(2.9306, -5.7112)` on ZZ, YX, XZ, ZX, XY.
    pub fn preset_s2_table2() -> Self {
        Self::preset("table2", StateFamily::S2, ALPHA, BETA_S2)
    }

    fn preset(set: &str, family: StateFamily, alpha: f64, beta: f64) -> Self {
        Self {
            observable_set: ObservableSet::Preset(set.into()),
            state: StateConfig {
                family,
                alpha,
                beta,
                amplitudes: None,
            },
            convention: Convention::Fine,
            shots: Shots::Exact,
            seed: 0,
            noise: None,
            outputs: OutputsConfig::default(),
        }
    }

    /// Both hardware presets with the shot count used on the device.
    pub fn hardware_presets() -> [Self; 2] {
        [Self::preset_s1_table1(), Self::preset_s2_table2()].map(|mut c| {
            c.shots = Shots::Count(SHOTS);
            c
        })
    }

    pub fn observables(&self) -> Result<Vec<PauliString>> {
        self.observable_set.resolve()
    }

    pub fn validate(&self) -> Result<()> {
        self.observables()?;
        self.state.to_spec()?;
        if let Some(noise) = &self.noise {
            noise.validate()?;
        }
        if self.outputs.format != "json" {
            return Err(Error::Config(format!("unsupported report format {:?}", self.outputs.format)));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let text = r#"{
          "observable_set": "table1",
          "state": { "family": "s1", "alpha": 2.9306, "beta": 2.9306 },
          "convention": "fine",
          "shots": 8192,
          "seed": 7,
          "noise": { "epsilon": 0.05, "readout_flip": [[[0.98, 0.02], [0.03, 0.97]], [[1, 0], [0, 1]]] },
          "outputs": { "report": "report.json", "format": "json" }
        }"#;
        let c = ExperimentConfig::from_json(text).unwrap();
        assert_eq!(c.shots, Shots::Count(8192));
        assert_eq!(c.noise.as_ref().unwrap().readout_flip.len(), 2);
        assert_eq!(c.observables().unwrap().len(), 5);
    }

    #[test]
    fn exact_shots_and_custom_set() {
        let text = r#"{"observable_set": ["ZZ","XX","XI","XZ","IZ"],
                       "state": {"family": "s2", "alpha": 1.0, "beta": 0.5},
                       "shots": "exact"}"#;
        let c = ExperimentConfig::from_json(text).unwrap();
        assert_eq!(c.shots, Shots::Exact);
        assert_eq!(c.convention, Convention::Fine);
    }

    #[test]
    fn rejects_broken_cycle_and_zero_shots() {
        let text = r#"{"observable_set": ["ZZ","XI","IZ"], "state": {"family": "s1"}}"#;
        assert!(matches!(ExperimentConfig::from_json(text), Err(Error::NonCommuting(_, _))));
        let text = r#"{"observable_set": "table1", "state": {"family": "s1"}, "shots": 0}"#;
        assert!(ExperimentConfig::from_json(text).is_err());
    }

    #[test]
    fn presets_round_trip() {
        for c in ExperimentConfig::hardware_presets() {
            assert_eq!(ExperimentConfig::from_json(&c.to_json()).unwrap(), c);
        }
    }
}
