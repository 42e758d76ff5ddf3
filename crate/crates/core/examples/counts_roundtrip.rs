//! Sample counts files for every context, then ingest them back.

use entropic_nc::config::{ExperimentConfig, Shots};
use entropic_nc::contexts::Convention;
use entropic_nc::pipeline::{context_file_stem, ingest_counts, run_experiment};
use entropic_nc::report::{read_counts, report_to_json, write_counts};

fn main() -> entropic_nc::Result<()> {
    let dir = std::env::temp_dir().join("entropic-nc-counts");
    std::fs::create_dir_all(&dir)?;
    let mut config = ExperimentConfig::preset_s2_table2();
    config.shots = Shots::Count(8192);
    config.seed = 11;
    let outcome = run_experiment(&config)?;
    let mut records = Vec::new();
    for run in outcome.runs() {
        let path = dir.join(format!("{}.json", context_file_stem(&run.context)));
        write_counts(run.counts.as_ref().expect("sampled"), &path)?;
        records.push(read_counts(&path)?);
    }
    let ingested = ingest_counts(&records, &config.observables()?, Convention::Coarse)?;
    println!("{}", report_to_json(&ingested.report));
    Ok(())
}
