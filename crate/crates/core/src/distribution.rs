use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const SUM_TOL: f64 = 1e-8;

/// Outcome of a measurement context: a tuple of eigenvalues, or a raw
/// readout record written most-significant qubit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OutcomeLabel {
    Eigen(Vec<i8>),
    Record(String),
}

impl OutcomeLabel {
    pub fn record(index: usize, bits: usize) -> Self {
        OutcomeLabel::Record(format!("{index:0bits$b}"))
    }

    /// Sign tuple in counting order: bit 0 of the counter is +1.
    pub fn eigen_from_index(index: usize, arity: usize) -> Self {
        OutcomeLabel::Eigen(
            (0..arity)
                .map(|k| if (index >> (arity - 1 - k)) & 1 == 0 { 1 } else { -1 })
                .collect(),
        )
    }

    pub fn arity(&self) -> usize {
        match self {
            OutcomeLabel::Eigen(v) => v.len(),
            OutcomeLabel::Record(s) => s.len(),
        }
    }

    pub fn as_record(&self) -> Option<&str> {
        match self {
            OutcomeLabel::Record(s) => Some(s),
            OutcomeLabel::Eigen(_) => None,
        }
    }
}

impl fmt::Display for OutcomeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutcomeLabel::Record(s) => f.write_str(s),
            OutcomeLabel::Eigen(v) => {
                let parts: Vec<String> = v.iter().map(|x| format!("{x:+}")).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDistribution {
    labels: Vec<OutcomeLabel>,
    probs: Vec<f64>,
}

impl OutcomeDistribution {
    /// Validates nonnegativity and normalization within `1e-8`.
    pub fn new(labels: Vec<OutcomeLabel>, probs: Vec<f64>) -> Result<Self> {
        if labels.len() != probs.len() {
            return Err(Error::LengthMismatch(labels.len(), probs.len()));
        }
        if labels.is_empty() {
            return Err(Error::InvalidDistribution("no outcomes".into()));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidDistribution(format!("negative probability {p}")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Self { labels, probs })
    }

    /// Unchecked constructor for values already known to be a distribution.
    pub(crate) fn from_parts(labels: Vec<OutcomeLabel>, probs: Vec<f64>) -> Self {
        debug_assert_eq!(labels.len(), probs.len());
        Self { labels, probs }
    }

    /// Plain probability vector over `0..k`, labeled by bit-string records
    /// when `k` is a power of two, otherwise by decimal index.
    pub fn from_probs(probs: Vec<f64>) -> Result<Self> {
        let k = probs.len();
        let labels = if k.is_power_of_two() && k > 1 {
            let bits = k.trailing_zeros() as usize;
            (0..k).map(|i| OutcomeLabel::record(i, bits)).collect()
        } else {
            (0..k).map(|i| OutcomeLabel::Record(i.to_string())).collect()
        };
        Self::new(labels, probs)
    }

    pub fn labels(&self) -> &[OutcomeLabel] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn prob_of(&self, label: &OutcomeLabel) -> Option<f64> {
        self.labels.iter().position(|l| l == label).map(|i| self.probs[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OutcomeLabel, f64)> {
        self.labels.iter().zip(self.probs.iter().copied())
    }

    pub fn is_record_valued(&self) -> bool {
        self.labels.iter().all(|l| matches!(l, OutcomeLabel::Record(_)))
    }

    /// Replaces probabilities, keeping labels; used by noise channels.
    pub(crate) fn with_probs(&self, probs: Vec<f64>) -> Self {
        Self::from_parts(self.labels.clone(), probs)
    }

    /// Marginal over one component of pair-valued eigen labels.
    pub fn eigen_marginal(&self, component: usize) -> Result<OutcomeDistribution> {
        let mut plus = 0.0;
        let mut minus = 0.0;
        for (label, p) in self.iter() {
            match label {
                OutcomeLabel::Eigen(v) if component < v.len() => {
                    if v[component] > 0 {
                        plus += p;
                    } else {
                        minus += p;
                    }
                }
                _ => return Err(Error::UnfactorableLabels),
            }
        }
        Ok(Self::from_parts(
            vec![OutcomeLabel::Eigen(vec![1]), OutcomeLabel::Eigen(vec![-1])],
            vec![plus, minus],
        ))
    }

    pub fn max_abs_diff(&self, other: &OutcomeDistribution) -> Option<f64> {
        if self.labels != other.labels {
            return None;
        }
        Some(
            self.probs
                .iter()
                .zip(&other.probs)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// Coarse distribution over `arity` ±1 values, probabilities in counting order.
pub fn eigen_distribution(probs: Vec<f64>) -> OutcomeDistribution {
    let k = probs.len();
    assert!(k.is_power_of_two() && k >= 2);
    let arity = k.trailing_zeros() as usize;
    let labels = (0..k).map(|i| OutcomeLabel::eigen_from_index(i, arity)).collect();
    OutcomeDistribution::from_parts(labels, probs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_probabilities() {
        assert!(OutcomeDistribution::from_probs(vec![0.5, 0.6]).is_err());
        assert!(OutcomeDistribution::from_probs(vec![1.5, -0.5]).is_err());
        assert!(OutcomeDistribution::from_probs(vec![0.5, 0.5]).is_ok());
    }

    #[test]
    fn eigen_labels_count_in_order() {
        let d = eigen_distribution(vec![0.25; 4]);
        let shown: Vec<String> = d.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["(+1,+1)", "(+1,-1)", "(-1,+1)", "(-1,-1)"]);
    }

    #[test]
    fn marginal_of_pair() {
        let d = eigen_distribution(vec![0.1, 0.2, 0.3, 0.4]);
        let m0 = d.eigen_marginal(0).unwrap();
        assert!((m0.probs()[0] - 0.3).abs() < 1e-15);
        let m1 = d.eigen_marginal(1).unwrap();
        assert!((m1.probs()[0] - 0.4).abs() < 1e-15);
    }
}
