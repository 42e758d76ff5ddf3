//! Noncontextual models never violate the inequality: every deterministic
//! assignment gives M = 0 and random mixtures stay below zero.

use entropic_nc::nc::{enumerate_assignments, m_of_model, NcModel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> entropic_nc::Result<()> {
    let worst_det = enumerate_assignments(5)?
        .iter()
        .enumerate()
        .map(|(i, _)| m_of_model(&NcModel::point_mass(5, i)))
        .collect::<entropic_nc::Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    println!("max M over 32 deterministic assignments: {worst_det}");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..10_000 {
        worst = worst.max(m_of_model(&NcModel::random_dirichlet(5, 0.3, &mut rng))?);
    }
    println!("max M over 10^4 random mixtures: {worst:.3e}");
    println!("uniform mixture: M = {}", m_of_model(&NcModel::uniform(5))?);
    Ok(())
}
