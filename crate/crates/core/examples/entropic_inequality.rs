//! Evaluate the cyclic entropic inequality from entropies, from the stored
//! hardware tables, and from an ideal simulation.

use entropic_nc::config::ExperimentConfig;
use entropic_nc::contexts::Convention;
use entropic_nc::entropy::{evaluate_m, evaluate_m_cycle};
use entropic_nc::pipeline::run_experiment;
use entropic_nc::reference::PaperReference;

fn main() -> entropic_nc::Result<()> {
    // all pairs 1 bit, all singles 1 bit: 1 - 4 + 3 = 0
    println!("flat entries: M = {}", evaluate_m_cycle(&[1.0; 5], &[1.0; 3], 5)?);

    let reference = PaperReference::get();
    println!("first hardware table:  M = {:.5}", evaluate_m(&reference.table3_entropies)?);
    println!("second hardware table: M = {:.5}", evaluate_m(&reference.table4_entropies)?);

    for convention in [Convention::Coarse, Convention::Fine] {
        let mut config = ExperimentConfig::preset_s1_table1();
        config.convention = convention;
        let report = run_experiment(&config)?.report;
        println!("ideal s1 {convention}: M = {:.6}", report.m_value);
    }
    Ok(())
}
