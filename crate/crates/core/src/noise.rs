//! Distribution-level noise: per-qubit readout confusion followed by global
//! depolarizing toward the uniform distribution, plus a one-parameter fit of
//! the depolarizing strength to target entropies.

use crate::distribution::OutcomeDistribution;
use crate::entropy::shannon_entropy;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `matrix[a][b]` is the probability of reading bit `b` when the true bit is `a`.
pub type Confusion = [[f64; 2]; 2];

pub const IDENTITY_CONFUSION: Confusion = [[1.0, 0.0], [0.0, 1.0]];

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    #[serde(rename = "epsilon", default)]
    pub depolarizing_epsilon: f64,
    /// One matrix per qubit, most significant first. Empty means perfect readout.
    #[serde(default)]
    pub readout_flip: Vec<Confusion>,
}

impl NoiseModel {
    pub fn depolarizing(epsilon: f64) -> Self {
        Self {
            depolarizing_epsilon: epsilon,
            readout_flip: Vec::new(),
        }
    }

    /// Symmetric bit-flip readout with probability `flip` on each of `n` qubits.
    pub fn symmetric_readout(n: usize, flip: f64) -> Self {
        Self {
            depolarizing_epsilon: 0.0,
            readout_flip: vec![[[1.0 - flip, flip], [flip, 1.0 - flip]]; n],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.depolarizing_epsilon) {
            return Err(Error::InvalidNoise(format!(
                "epsilon {} outside [0, 1]",
                self.depolarizing_epsilon
            )));
        }
        for (q, m) in self.readout_flip.iter().enumerate() {
            for row in m {
                if row.iter().any(|&x| !(0.0..=1.0).contains(&x)) || (row[0] + row[1] - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidNoise(format!(
                        "readout matrix for qubit {q} is not row-stochastic"
                    )));
                }
            }
        }
        Ok(())
    }

    fn readout_is_identity(&self) -> bool {
        self.readout_flip.iter().all(|m| *m == IDENTITY_CONFUSION)
    }
}

pub fn apply_noise(dist: &OutcomeDistribution, noise: &NoiseModel) -> Result<OutcomeDistribution> {
    noise.validate()?;
    let mut probs = dist.probs().to_vec();
    if !noise.readout_is_identity() {
        let n = noise.readout_flip.len();
        let indices: Vec<usize> = dist
            .labels()
            .iter()
            .map(|l| {
                l.as_record()
                    .filter(|r| r.len() == n)
                    .and_then(|r| usize::from_str_radix(r, 2).ok())
                    .ok_or_else(|| {
                        Error::Arity(format!("readout noise for {n} qubits cannot act on label {l}"))
                    })
            })
            .collect::<Result<_>>()?;
        if dist.len() != 1 << n {
            return Err(Error::Arity(format!(
                "readout noise needs all {} records, got {}",
                1 << n,
                dist.len()
            )));
        }
        let mut by_index = vec![0.0; 1 << n];
        for (i, p) in indices.iter().zip(&probs) {
            by_index[*i] = *p;
        }
        for (q, m) in noise.readout_flip.iter().enumerate() {
            let mask = 1 << (n - 1 - q);
            for i in 0..by_index.len() {
                if i & mask == 0 {
                    let (p0, p1) = (by_index[i], by_index[i | mask]);
                    by_index[i] = p0 * m[0][0] + p1 * m[1][0];
                    by_index[i | mask] = p0 * m[0][1] + p1 * m[1][1];
                }
            }
        }
        probs = indices.iter().map(|&i| by_index[i]).collect();
    }
    let eps = noise.depolarizing_epsilon;
    let k = probs.len() as f64;
    let mut probs: Vec<f64> = probs.iter().map(|p| ((1.0 - eps) * p + eps / k).max(0.0)).collect();
    let total: f64 = probs.iter().sum();
    probs.iter_mut().for_each(|p| *p /= total);
    Ok(dist.with_probs(probs))
}

/// Golden-section minimization of a unimodal `f` on `[lo, hi]` down to a
/// bracket width of `tol`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DepolarizingFit {
    pub epsilon: f64,
    /// Sum of squared entropy differences at `epsilon`.
    pub residual: f64,
}

/// Fits one depolarizing strength shared by all `dists` so their entropies
/// match `targets` in the least-squares sense. A `1e-3` grid scan brackets
/// the global minimum, golden-section search refines it to `1e-4`.
pub fn fit_depolarizing(dists: &[OutcomeDistribution], targets: &[f64]) -> Result<DepolarizingFit> {
    if dists.is_empty() {
        return Err(Error::EmptyInput("no context distributions to fit".into()));
    }
    if dists.len() != targets.len() {
        return Err(Error::LengthMismatch(dists.len(), targets.len()));
    }
    let objective = |eps: f64| -> f64 {
        dists
            .iter()
            .zip(targets)
            .map(|(d, t)| {
                let noisy = apply_noise(d, &NoiseModel::depolarizing(eps)).expect("valid epsilon");
                let h = shannon_entropy(&noisy).expect("normalized");
                (h - t).powi(2)
            })
            .sum()
    };
    let steps: usize = 1000;
    let (best_i, _) = (0..=steps)
        .map(|i| (i, objective(i as f64 / steps as f64)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let lo = (best_i.saturating_sub(1)) as f64 / steps as f64;
    let hi = ((best_i + 1).min(steps)) as f64 / steps as f64;
    let refined = golden_section_min(objective, lo, hi, 1e-4);
    // the bracket ends are candidates too, so boundary minima come back exactly
    let epsilon = [refined, lo, hi, best_i as f64 / steps as f64]
        .into_iter()
        .min_by(|a, b| objective(*a).partial_cmp(&objective(*b)).unwrap())
        .unwrap();
    Ok(DepolarizingFit {
        epsilon,
        residual: objective(epsilon),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(p: &[f64]) -> OutcomeDistribution {
        OutcomeDistribution::from_probs(p.to_vec()).unwrap()
    }

    #[test]
    fn noise_examples() {
        let base = d(&[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(apply_noise(&base, &NoiseModel::default()).unwrap(), base);
        let full = apply_noise(&base, &NoiseModel::depolarizing(1.0)).unwrap();
        assert!(full.probs().iter().all(|p| (p - 0.25).abs() < 1e-15));
        let half = apply_noise(&d(&[1.0, 0.0, 0.0, 0.0]), &NoiseModel::depolarizing(0.5)).unwrap();
        assert_eq!(half.probs(), &[0.625, 0.125, 0.125, 0.125]);
    }

    #[test]
    fn readout_flip_on_one_qubit() {
        let mut noise = NoiseModel::symmetric_readout(2, 0.0);
        noise.readout_flip[1] = [[0.9, 0.1], [0.2, 0.8]];
        let out = apply_noise(&d(&[1.0, 0.0, 0.0, 0.0]), &noise).unwrap();
        assert!((out.probs()[0] - 0.9).abs() < 1e-15);
        assert!((out.probs()[1] - 0.1).abs() < 1e-15);
        let out = apply_noise(&d(&[0.0, 1.0, 0.0, 0.0]), &noise).unwrap();
        assert!((out.probs()[0] - 0.2).abs() < 1e-15);
    }

    #[test]
    fn readout_arity_mismatch() {
        let noise = NoiseModel::symmetric_readout(3, 0.1);
        assert!(matches!(
            apply_noise(&d(&[0.25; 4]), &noise),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn invalid_noise_rejected() {
        assert!(apply_noise(&d(&[0.5, 0.5]), &NoiseModel::depolarizing(1.5)).is_err());
        let bad = NoiseModel {
            depolarizing_epsilon: 0.0,
            readout_flip: vec![[[0.7, 0.7], [0.0, 1.0]]],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn golden_section_finds_parabola_minimum() {
        let x = golden_section_min(|x| (x - 0.3).powi(2), 0.0, 1.0, 1e-8);
        assert!((x - 0.3).abs() < 1e-7);
    }

    #[test]
    fn fit_recovers_zero_and_one() {
        let dists = vec![d(&[0.7, 0.1, 0.1, 0.1]), d(&[0.5, 0.5, 0.0, 0.0])];
        let ideal: Vec<f64> = dists.iter().map(|x| shannon_entropy(x).unwrap()).collect();
        let fit = fit_depolarizing(&dists, &ideal).unwrap();
        assert_eq!(fit.epsilon, 0.0);
        assert!(fit.residual < 1e-20);
        let fit = fit_depolarizing(&dists, &[2.0, 2.0]).unwrap();
        assert_eq!(fit.epsilon, 1.0);
        assert!(fit.residual < 1e-20);
    }

    #[test]
    fn fit_recovers_planted_epsilon() {
        let dists = vec![d(&[0.7, 0.1, 0.1, 0.1]), d(&[0.9, 0.1, 0.0, 0.0])];
        let targets: Vec<f64> = dists
            .iter()
            .map(|x| shannon_entropy(&apply_noise(x, &NoiseModel::depolarizing(0.37)).unwrap()).unwrap())
            .collect();
        let fit = fit_depolarizing(&dists, &targets).unwrap();
        assert!((fit.epsilon - 0.37).abs() < 1e-4, "{}", fit.epsilon);
    }

    #[test]
    fn fit_rejects_empty() {
        assert!(matches!(fit_depolarizing(&[], &[]), Err(Error::EmptyInput(_))));
    }
}
