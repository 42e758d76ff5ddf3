//! Shannon entropies in bits and the cyclic entropic inequality.
//!
//! For observables `X1..Xn` measured in the cyclic contexts
//! `(X1,X2), (X2,X3), ..., (Xn,X1)`, any noncontextual model satisfies
//!
//! ```text
//! M = H(Xn X1) - sum_{i=1}^{n-1} H(Xi Xi+1) + sum_{i=2}^{n-1} H(Xi) <= 0
//! ```
//!
//! and `M > 0` rules out a global joint distribution.

use crate::contexts::Convention;
use crate::distribution::{OutcomeDistribution, OutcomeLabel, SUM_TOL};
use crate::error::{Error, Result};
use crate::sampler::CountsRecord;
use std::collections::BTreeMap;

/// `-sum p log2 p` with `0 log 0 = 0`. Rejects negative entries and sums
/// further than `1e-8` from one.
pub fn entropy_bits(probs: &[f64]) -> Result<f64> {
    if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
        return Err(Error::InvalidDistribution(format!("negative probability {p}")));
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > SUM_TOL {
        return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
    }
    Ok(probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum::<f64>()
        .max(0.0))
}

pub fn shannon_entropy(dist: &OutcomeDistribution) -> Result<f64> {
    entropy_bits(dist.probs())
}

/// `H(A|B) = H(A,B) - H(B)` for a joint over eigenvalue pairs `(a, b)`.
pub fn conditional_entropy(joint: &OutcomeDistribution) -> Result<f64> {
    if joint
        .labels()
        .iter()
        .any(|l| !matches!(l, OutcomeLabel::Eigen(v) if v.len() == 2))
    {
        return Err(Error::UnfactorableLabels);
    }
    let h_ab = shannon_entropy(joint)?;
    let h_b = shannon_entropy(&joint.eigen_marginal(1)?)?;
    Ok(h_ab - h_b)
}

/// Name of adjacent pair `i` (zero-based) in an `n`-cycle: `X{i+1}X{i+2}`,
/// wrapping to `XnX1` for the last.
pub fn pair_name(i: usize, n: usize) -> String {
    format!("X{}X{}", i + 1, (i + 1) % n + 1)
}

/// Interior singles are `X2..X(n-1)`.
pub fn single_name(index_one_based: usize) -> String {
    format!("X{index_one_based}")
}

/// `M_n` from the `n` cyclic pair entropies, ordered `(1,2), ..., (n-1,n),
/// (n,1)`, and the `n - 2` singles `H(X2)..H(X(n-1))`.
pub fn evaluate_m_cycle(h_pairs: &[f64], h_singles: &[f64], n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::Arity(format!("cycle length {n} < 3")));
    }
    if h_pairs.len() != n {
        return Err(Error::Arity(format!("expected {n} pair entropies, got {}", h_pairs.len())));
    }
    if h_singles.len() != n - 2 {
        return Err(Error::Arity(format!(
            "expected {} single entropies, got {}",
            n - 2,
            h_singles.len()
        )));
    }
    for (i, h) in h_pairs.iter().enumerate() {
        if !h.is_finite() {
            return Err(Error::MissingEntry(format!("H({})", pair_name(i, n))));
        }
    }
    for (i, h) in h_singles.iter().enumerate() {
        if !h.is_finite() {
            return Err(Error::MissingEntry(format!("H({})", single_name(i + 2))));
        }
    }
    let closing = h_pairs[n - 1];
    let chain: f64 = h_pairs[..n - 1].iter().sum();
    let singles: f64 = h_singles.iter().sum();
    Ok(closing - chain + singles)
}

/// Named entropies as they appear in tables and literal-entropy files, e.g.
/// `"X2"` or `"X5X1"`.
pub type EntropyEntries = BTreeMap<String, f64>;

/// Pulls the cyclic pair and interior single entries out of `entries`.
pub fn cycle_vectors(entries: &EntropyEntries, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let get = |name: String| {
        entries
            .get(&name)
            .copied()
            .ok_or_else(|| Error::MissingEntry(format!("H({name})")))
    };
    let pairs = (0..n).map(|i| get(pair_name(i, n))).collect::<Result<Vec<_>>>()?;
    let singles = (2..n).map(|i| get(single_name(i))).collect::<Result<Vec<_>>>()?;
    Ok((pairs, singles))
}

/// Five-cycle inequality from named entries.
pub fn evaluate_m(entries: &EntropyEntries) -> Result<f64> {
    let (pairs, singles) = cycle_vectors(entries, 5)?;
    evaluate_m_cycle(&pairs, &singles, 5)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyReport {
    /// Keyed `"X2"`, `"X3"`, ...
    pub h_singles: BTreeMap<String, f64>,
    /// Keyed `"X1X2"`, ..., `"XnX1"`.
    pub h_pairs: BTreeMap<String, f64>,
    pub m_value: f64,
    pub convention: Convention,
    pub lp_feasible: Option<bool>,
    pub flags: Vec<String>,
}

impl EntropyReport {
    pub fn from_cycle(h_pairs: &[f64], h_singles: &[f64], convention: Convention) -> Result<Self> {
        let n = h_pairs.len();
        let m_value = evaluate_m_cycle(h_pairs, h_singles, n)?;
        Ok(Self {
            h_singles: h_singles
                .iter()
                .enumerate()
                .map(|(i, h)| (single_name(i + 2), *h))
                .collect(),
            h_pairs: h_pairs
                .iter()
                .enumerate()
                .map(|(i, h)| (pair_name(i, n), *h))
                .collect(),
            m_value,
            convention,
            lp_feasible: None,
            flags: Vec::new(),
        })
    }

    pub fn cycle_len(&self) -> usize {
        self.h_pairs.len()
    }

    /// Ordered `(pairs, singles)` vectors.
    pub fn cycle_vectors(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let mut all = self.h_pairs.clone();
        all.extend(self.h_singles.iter().map(|(k, v)| (k.clone(), *v)));
        cycle_vectors(&all, self.cycle_len())
    }

    pub fn recompute_m(&self) -> Result<f64> {
        let (pairs, singles) = self.cycle_vectors()?;
        evaluate_m_cycle(&pairs, &singles, self.cycle_len())
    }
}

/// Maximum-likelihood distribution `count / shots`. Bit-string labels of a
/// common width are completed to the full record set in counting order.
pub fn entropies_from_counts(counts: &CountsRecord) -> Result<OutcomeDistribution> {
    let total: u64 = counts.counts.values().sum();
    if total == 0 {
        return Err(Error::ZeroShots);
    }
    let width = counts.counts.keys().next().map(|k| k.len()).unwrap_or(0);
    let all_bits = counts
        .counts
        .keys()
        .all(|k| k.len() == width && k.chars().all(|c| c == '0' || c == '1'));
    let (labels, probs): (Vec<_>, Vec<_>) = if all_bits && width > 0 && width < 24 {
        (0..(1usize << width))
            .map(|i| {
                let label = OutcomeLabel::record(i, width);
                let c = counts.counts.get(label.as_record().unwrap()).copied().unwrap_or(0);
                (label, c as f64 / total as f64)
            })
            .unzip()
    } else {
        counts
            .counts
            .iter()
            .map(|(k, &c)| (OutcomeLabel::Record(k.clone()), c as f64 / total as f64))
            .unzip()
    };
    OutcomeDistribution::new(labels, probs)
}

/// Plug-in entropy plus the Miller-Madow term `(m - 1) / (2 N ln 2)` with
/// `m` the number of observed outcomes.
pub fn miller_madow_entropy(counts: &CountsRecord) -> Result<f64> {
    let dist = entropies_from_counts(counts)?;
    let total: u64 = counts.counts.values().sum();
    let observed = counts.counts.values().filter(|&&c| c > 0).count() as f64;
    Ok(shannon_entropy(&dist)? + (observed - 1.0) / (2.0 * total as f64 * std::f64::consts::LN_2))
}
