use clap::{Args, Parser, Subcommand};
use entropic_nc::config::{ExperimentConfig, Shots};
use entropic_nc::contexts::Convention;
use entropic_nc::entropy::evaluate_m_cycle;
use entropic_nc::pipeline::{
    context_file_stem, export_qasm_suite, fit_noise, ingest_counts, ingest_literal, reproduce_paper, run_experiment,
    sweep, SweepAxis,
};
use entropic_nc::reference::PaperReference;
use entropic_nc::report::{read_counts, read_literal_entropies, report_to_json, write_counts};
use entropic_nc::statevec::StateFamily;
use entropic_nc::Result;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "entropic-nc", version, about = "Entropic noncontextuality on two-qubit cyclic contexts")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Experiment config (JSON). Defaults to the s1/table1 preset.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Built-in preset used when no config is given: s1 or s2.
    #[arg(long, global = true)]
    preset: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Shots per context, or "exact".
    #[arg(long, global = true)]
    shots: Option<String>,
    #[arg(long, global = true)]
    convention: Option<Convention>,
    /// Output file, or directory for commands writing several files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print the report.
    Simulate,
    /// Entropy report from counts files, or from the configured simulation.
    Entropies {
        #[arg(long = "counts", num_args = 1..)]
        counts: Vec<PathBuf>,
    },
    /// Evaluate M from a literal-entropies or report file, or the simulation.
    Inequality {
        #[arg(long)]
        entropies: Option<PathBuf>,
    },
    /// Classical marginal check of the coarse pair distributions.
    NcCheck,
    /// Sample one counts file per context into the --out directory.
    Sample,
    /// Exact M over a state grid, written as CSV.
    Sweep {
        #[arg(long, default_value = "s1")]
        family: String,
        /// start:stop:step, or a single value.
        #[arg(long, default_value = "0:3.141592653589793:0.05")]
        alpha: String,
        #[arg(long, default_value = "0:3.141592653589793:0.05")]
        beta: String,
    },
    /// Fit a depolarizing strength to target entropies (default: first hardware table).
    FitNoise {
        #[arg(long)]
        targets: Option<PathBuf>,
    },
    /// Write one OpenQASM 2.0 file per context into the --out directory.
    ExportQasm,
    /// Compare stored hardware values with recomputation and ideal simulation.
    ReproducePaper,
}

fn load_config(c: &Common) -> Result<ExperimentConfig> {
    let mut config = match (&c.config, c.preset.as_deref()) {
        (Some(path), _) => ExperimentConfig::load(path)?,
        (None, None | Some("s1")) => ExperimentConfig::preset_s1_table1(),
        (None, Some("s2")) => ExperimentConfig::preset_s2_table2(),
        (None, Some(other)) => {
            return Err(entropic_nc::Error::Config(format!("unknown preset {other:?}")));
        }
    };
    if let Some(seed) = c.seed {
        config.seed = seed;
    }
    if let Some(shots) = &c.shots {
        config.shots = Shots::parse(shots)?;
    }
    if let Some(conv) = c.convention {
        config.convention = conv;
    }
    config.outputs.report = None;
    config.validate()?;
    Ok(config)
}

fn emit(c: &Common, text: &str) -> Result<()> {
    match &c.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn out_dir(c: &Common) -> PathBuf {
    c.out.clone().unwrap_or_else(|| PathBuf::from("."))
}

fn parse_axis(text: &str) -> Result<SweepAxis> {
    let parts: Vec<f64> = text
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| entropic_nc::Error::Config(format!("bad axis {text:?}: {e}")))?;
    match parts[..] {
        [v] => Ok(SweepAxis::fixed(v)),
        [start, stop, step] => SweepAxis::stepped(start, stop, step),
        _ => Err(entropic_nc::Error::Config(format!("axis must be start:stop:step, got {text:?}"))),
    }
}

fn run(cli: Cli) -> Result<()> {
    let c = &cli.common;
    match cli.command {
        Command::Simulate => {
            let outcome = run_experiment(&load_config(c)?)?;
            emit(c, &(report_to_json(&outcome.report) + "\n"))
        }
        Command::Entropies { counts } => {
            let config = load_config(c)?;
            let report = if counts.is_empty() {
                run_experiment(&config)?.report
            } else {
                let records = counts.iter().map(|p| read_counts(p)).collect::<Result<Vec<_>>>()?;
                ingest_counts(&records, &config.observables()?, config.convention)?.report
            };
            emit(c, &(report_to_json(&report) + "\n"))
        }
        Command::Inequality { entropies } => {
            let report = match entropies {
                Some(path) => ingest_literal(&read_literal_entropies(&path)?, c.convention.unwrap_or_default())?,
                None => run_experiment(&load_config(c)?)?.report,
            };
            let (pairs, singles) = report.cycle_vectors()?;
            let m = evaluate_m_cycle(&pairs, &singles, report.cycle_len())?;
            emit(c, &format!("M = {m:.11}\n"))
        }
        Command::NcCheck => {
            let outcome = run_experiment(&load_config(c)?)?;
            let text = serde_json::to_string_pretty(&outcome.feasibility)?;
            emit(c, &(text + "\n"))
        }
        Command::Sample => {
            let mut config = load_config(c)?;
            if config.shots == Shots::Exact {
                config.shots = Shots::Count(entropic_nc::reference::SHOTS);
            }
            let outcome = run_experiment(&config)?;
            let dir = out_dir(c);
            std::fs::create_dir_all(&dir)?;
            for r in outcome.runs() {
                let path = dir.join(format!("{}.json", context_file_stem(&r.context)));
                write_counts(r.counts.as_ref().expect("sampled run has counts"), &path)?;
                println!("{}", path.display());
            }
            Ok(())
        }
        Command::Sweep { family, alpha, beta } => {
            let family = match family.as_str() {
                "s1" => StateFamily::S1,
                "s2" => StateFamily::S2,
                other => return Err(entropic_nc::Error::Config(format!("unknown family {other:?}"))),
            };
            let config = load_config(c)?;
            let result = sweep(family, &parse_axis(&alpha)?, &parse_axis(&beta)?, &config.observables()?)?;
            emit(c, &result.to_csv())?;
            if let Some(best) = result.max_coarse() {
                eprintln!("max M_coarse = {:.11} at alpha = {}, beta = {}", best.m_coarse, best.alpha, best.beta);
            }
            if let Some(best) = result.max_fine() {
                eprintln!("max M_fine = {:.11} at alpha = {}, beta = {}", best.m_fine.unwrap(), best.alpha, best.beta);
            }
            if !result.skipped.is_empty() {
                eprintln!("skipped {} null-state grid points", result.skipped.len());
            }
            Ok(())
        }
        Command::FitNoise { targets } => {
            let mut config = load_config(c)?;
            if c.convention.is_none() {
                config.convention = Convention::Fine;
            }
            let targets = match targets {
                Some(path) => read_literal_entropies(&path)?,
                None => PaperReference::get().table3_entropies,
            };
            let fit = fit_noise(&config, &targets)?;
            emit(c, &format!("epsilon = {:.6}\nresidual = {:.6}\n", fit.epsilon, fit.residual))
        }
        Command::ExportQasm => {
            let export = export_qasm_suite(&load_config(c)?, &out_dir(c))?;
            for (_, path) in &export.written {
                println!("{}", path.display());
            }
            for (ctx, why) in &export.unsupported {
                eprintln!("unsupported {ctx}: {why}");
            }
            Ok(())
        }
        Command::ReproducePaper => emit(c, &reproduce_paper()?.render()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
