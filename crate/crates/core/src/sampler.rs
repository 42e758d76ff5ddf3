//! Finite-shot sampling.
//!
//! Seed-to-counts mapping (stable within a major version): a `ChaCha8Rng`
//! is seeded with `seed_from_u64(seed)`, then outcomes are visited in the
//! distribution's label order and each count is drawn as
//! `Binomial(remaining_shots, p_i / remaining_mass)`; the last outcome takes
//! whatever shots remain. Tasks that sample several distributions use seed
//! `base + task_index`.

use crate::distribution::OutcomeDistribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Shot counts for one context; the on-disk counts format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsRecord {
    /// Observables of the context as Pauli text, e.g. `["XX", "XI"]`.
    pub context: Vec<String>,
    pub shots: u64,
    pub counts: BTreeMap<String, u64>,
}

impl CountsRecord {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn with_context(mut self, context: Vec<String>) -> Self {
        self.context = context;
        self
    }
}

pub fn sample_counts(dist: &OutcomeDistribution, shots: u64, seed: u64) -> CountsRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining = shots;
    let mut mass = 1.0;
    let mut counts = BTreeMap::new();
    let last = dist.len() - 1;
    for (i, (label, p)) in dist.iter().enumerate() {
        let k = if i == last || remaining == 0 {
            remaining
        } else if mass <= 0.0 {
            0
        } else {
            let q = (p / mass).clamp(0.0, 1.0);
            Binomial::new(remaining, q)
                .expect("probability in [0, 1]")
                .sample(&mut rng)
        };
        counts.insert(label.to_string(), k);
        remaining -= k;
        mass -= p;
    }
    CountsRecord {
        context: Vec::new(),
        shots,
        counts,
    }
}
