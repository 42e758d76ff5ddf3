//! Finite-shot estimates of M and how they tighten with more shots.

use entropic_nc::config::{ExperimentConfig, Shots};
use entropic_nc::contexts::Convention;
use entropic_nc::pipeline::run_experiment;

fn main() -> entropic_nc::Result<()> {
    let mut config = ExperimentConfig::preset_s1_table1();
    config.convention = Convention::Coarse;
    let exact = run_experiment(&config)?.report.m_value;
    println!("exact M = {exact:.5}");
    for exp in [13, 16, 19] {
        config.shots = Shots::Count(1 << exp);
        let mut total = 0.0;
        let seeds = 20;
        for seed in 0..seeds {
            config.seed = seed * 100;
            total += (run_experiment(&config)?.report.m_value - exact).abs();
        }
        println!("2^{exp} shots: mean |dM| = {:.5}", total / seeds as f64);
    }
    Ok(())
}
