//! Depolarizing noise inflates entropies; fit its strength to the first
//! hardware table.

use entropic_nc::config::ExperimentConfig;
use entropic_nc::noise::NoiseModel;
use entropic_nc::pipeline::{fit_table3, run_experiment};

fn main() -> entropic_nc::Result<()> {
    for eps in [0.0, 0.1, 0.3, 0.6, 1.0] {
        let mut config = ExperimentConfig::preset_s1_table1();
        config.noise = Some(NoiseModel::depolarizing(eps));
        let out = run_experiment(&config)?;
        println!("epsilon {eps:.1}: M_fine = {:+.5}, M_coarse = {:+.5}", out.report.m_value, out.m_coarse);
    }
    let fit = fit_table3()?;
    println!("fit to hardware entropies: epsilon = {:.5}, residual = {:.5}", fit.epsilon, fit.residual);
    Ok(())
}
