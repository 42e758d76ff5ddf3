//! End-to-end runs: simulate or ingest the eight cyclic contexts, evaluate
//! the inequality, check the coarse pair marginals against the classical
//! polytope, and compare with the stored hardware values.

use crate::config::{ExperimentConfig, Shots};
use crate::contexts::{
    coarsen, export_measurement_circuit, joint_distribution_coarse, joint_distribution_fine, Convention,
    MeasurementContext,
};
use crate::distribution::OutcomeDistribution;
use crate::entropy::{
    entropies_from_counts, evaluate_m, evaluate_m_cycle, shannon_entropy, EntropyEntries, EntropyReport,
};
use crate::error::{Error, Result};
use crate::nc::{lp_feasibility, FeasibilityResult};
use crate::noise::{apply_noise, fit_depolarizing, DepolarizingFit, NoiseModel};
use crate::pauli::{table1_observables, PauliString};
use crate::reference::{PaperReference, ALPHA, BETA_S1, M_PRINTED_S1, M_PRINTED_S2};
use crate::sampler::{sample_counts, CountsRecord};
use crate::statevec::{prepare_state, synthesize_prep_circuit, QuantumState, StateFamily, StatePrepSpec};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// LP tolerance for exact distributions.
pub const EXACT_LP_TOL: f64 = 1e-9;

/// LP tolerance on the total violation for sampled marginals: three
/// binomial standard deviations (at most `0.5 / sqrt(shots)`) per pair cell.
pub fn sampled_lp_tolerance(n: usize, shots: u64) -> f64 {
    4.0 * n as f64 * 3.0 * 0.5 / (shots as f64).sqrt()
}

/// The interior singles `X2..X(n-1)` followed by the cyclic pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleContexts {
    pub singles: Vec<MeasurementContext>,
    pub pairs: Vec<MeasurementContext>,
}

impl CycleContexts {
    pub fn new(observables: &[PauliString], convention: Convention) -> Result<Self> {
        let n = observables.len();
        if n < 3 {
            return Err(Error::InvalidContext(format!("a cycle needs at least 3 observables, got {n}")));
        }
        let singles = (1..n - 1)
            .map(|i| MeasurementContext::single(observables[i].clone(), convention))
            .collect::<Result<_>>()?;
        let pairs = (0..n)
            .map(|i| MeasurementContext::pair(observables[i].clone(), observables[(i + 1) % n].clone(), convention))
            .collect::<Result<_>>()?;
        Ok(Self { singles, pairs })
    }

    pub fn cycle_len(&self) -> usize {
        self.pairs.len()
    }

    /// Singles then pairs; the index here is the sampling task index.
    pub fn all(&self) -> impl Iterator<Item = &MeasurementContext> {
        self.singles.iter().chain(&self.pairs)
    }
}

/// Statistics of one context as the pipeline saw them.
#[derive(Clone, Debug, PartialEq)]
pub struct ContextRun {
    pub context: MeasurementContext,
    /// Readout record, absent when no fine basis exists.
    pub fine: Option<OutcomeDistribution>,
    pub coarse: OutcomeDistribution,
    pub counts: Option<CountsRecord>,
}

impl ContextRun {
    /// Distribution whose entropy enters the report for `convention`.
    pub fn distribution(&self, convention: Convention) -> &OutcomeDistribution {
        match (convention, &self.fine) {
            (Convention::Fine, Some(f)) => f,
            _ => &self.coarse,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutcome {
    pub report: EntropyReport,
    pub feasibility: FeasibilityResult,
    pub m_coarse: f64,
    /// `None` when some context had no fine basis.
    pub m_fine: Option<f64>,
    pub singles: Vec<ContextRun>,
    pub pairs: Vec<ContextRun>,
}

impl ExperimentOutcome {
    pub fn runs(&self) -> impl Iterator<Item = &ContextRun> {
        self.singles.iter().chain(&self.pairs)
    }

    pub fn coarse_pairs(&self) -> Vec<OutcomeDistribution> {
        self.pairs.iter().map(|r| r.coarse.clone()).collect()
    }
}

fn exact_run(
    state: &QuantumState,
    context: &MeasurementContext,
    noise: Option<&NoiseModel>,
) -> Result<ContextRun> {
    let fine = match joint_distribution_fine(state, context) {
        Ok(d) => Some(d),
        Err(Error::FineBasisUnavailable(_)) => None,
        Err(e) => return Err(e),
    };
    let (fine, coarse) = match fine {
        Some(f) => {
            let f = match noise {
                Some(model) => apply_noise(&f, model)?,
                None => f,
            };
            let c = coarsen(&f, context)?;
            (Some(f), c)
        }
        None => {
            let c = joint_distribution_coarse(state, context)?;
            let c = match noise {
                Some(model) => apply_noise(&c, &NoiseModel::depolarizing(model.depolarizing_epsilon))?,
                None => c,
            };
            (None, c)
        }
    };
    Ok(ContextRun {
        context: context.clone(),
        fine,
        coarse,
        counts: None,
    })
}

fn sampled_run(exact: ContextRun, shots: u64, seed: u64) -> Result<ContextRun> {
    let source = exact.fine.as_ref().unwrap_or(&exact.coarse);
    let counts = sample_counts(source, shots, seed).with_context(exact.context.texts());
    let mut run = run_from_counts(&exact.context, &counts)?;
    run.counts = Some(counts);
    Ok(run)
}

/// MLE statistics of `counts` for `context`. Labels of the fine record width
/// are records; labels with one bit per observable are eigenvalue bits
/// (0 for +1), which leaves the fine record unknown.
pub fn run_from_counts(context: &MeasurementContext, counts: &CountsRecord) -> Result<ContextRun> {
    let dist = entropies_from_counts(counts)?;
    let width = counts.counts.keys().next().map(|k| k.len()).unwrap_or(0);
    let fine_bits = context.fine_basis().ok().map(|b| match b {
        crate::contexts::FineBasis::Local(_) => context.num_qubits(),
        crate::contexts::FineBasis::EigenPair => context.arity(),
    });
    if Some(width) == fine_bits && dist.is_record_valued() {
        let coarse = coarsen(&dist, context)?;
        return Ok(ContextRun {
            context: context.clone(),
            fine: Some(dist),
            coarse,
            counts: Some(counts.clone()),
        });
    }
    if width == context.arity() && dist.len() == 1 << width {
        let coarse = crate::distribution::eigen_distribution(dist.probs().to_vec());
        return Ok(ContextRun {
            context: context.clone(),
            fine: None,
            coarse,
            counts: Some(counts.clone()),
        });
    }
    Err(Error::Arity(format!(
        "counts for context {context} use {width}-bit labels"
    )))
}

/// Post-measurement half shared by simulation and ingestion.
fn assemble(
    singles: Vec<ContextRun>,
    pairs: Vec<ContextRun>,
    convention: Convention,
    lp_tolerance: f64,
    mut flags: Vec<String>,
) -> Result<ExperimentOutcome> {
    let n = pairs.len();
    let entropies = |runs: &[ContextRun], conv: Convention| -> Result<Vec<f64>> {
        runs.iter().map(|r| shannon_entropy(r.distribution(conv))).collect()
    };
    let all_fine = singles.iter().chain(&pairs).all(|r| r.fine.is_some());
    let m_coarse = evaluate_m_cycle(
        &entropies(&pairs, Convention::Coarse)?,
        &entropies(&singles, Convention::Coarse)?,
        n,
    )?;
    let m_fine = if all_fine {
        Some(evaluate_m_cycle(
            &entropies(&pairs, Convention::Fine)?,
            &entropies(&singles, Convention::Fine)?,
            n,
        )?)
    } else {
        None
    };
    for run in singles.iter().chain(&pairs) {
        if convention == Convention::Fine {
            if run.fine.is_none() {
                flags.push(format!(
                    "FINE_FALLBACK: no fine readout for context {}, coarse statistics used",
                    run.context
                ));
            } else {
                flags.extend(run.context.identity_axis_notes().into_iter().map(|s| format!("AXIS: {s}")));
            }
        }
    }
    let mut report = EntropyReport::from_cycle(
        &entropies(&pairs, convention)?,
        &entropies(&singles, convention)?,
        convention,
    )?;
    if convention == Convention::Fine {
        flags.push(format!("COARSE_M: {m_coarse:.11}"));
    }
    let coarse_pairs: Vec<OutcomeDistribution> = pairs.iter().map(|r| r.coarse.clone()).collect();
    let feasibility = lp_feasibility(&coarse_pairs, n, lp_tolerance)?;
    report.lp_feasible = Some(feasibility.feasible);
    if !feasibility.feasible && m_coarse <= 0.0 {
        flags.push(format!(
            "LP_INFEASIBLE_WITHOUT_VIOLATION: coarse pair marginals admit no classical model (total violation {:.3e}) although coarse M <= 0",
            feasibility.total_violation
        ));
    }
    if report.m_value <= 0.0 {
        flags.push("NO_VIOLATION: M <= 0".into());
    }
    report.flags = flags;
    Ok(ExperimentOutcome {
        report,
        feasibility,
        m_coarse,
        m_fine,
        singles,
        pairs,
    })
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let observables = config.observables()?;
    let state = prepare_state(&config.state.to_spec()?)?;
    let contexts = CycleContexts::new(&observables, config.convention)?;
    let noise = config.noise.as_ref();
    let mut runs = contexts
        .all()
        .map(|c| exact_run(&state, c, noise))
        .collect::<Result<Vec<_>>>()?;
    let mut flags = Vec::new();
    let tolerance = match config.shots {
        Shots::Exact => EXACT_LP_TOL,
        Shots::Count(shots) => {
            runs = runs
                .into_iter()
                .enumerate()
                .map(|(t, run)| sampled_run(run, shots, config.seed.wrapping_add(t as u64)))
                .collect::<Result<_>>()?;
            flags.push(format!("SAMPLED: {shots} shots per context, seed {}", config.seed));
            sampled_lp_tolerance(contexts.cycle_len(), shots)
        }
    };
    if let Some(model) = noise {
        flags.push(format!("NOISE: epsilon {}", model.depolarizing_epsilon));
    }
    let pairs = runs.split_off(contexts.singles.len());
    let outcome = assemble(runs, pairs, config.convention, tolerance, flags)?;
    if let Some(path) = &config.outputs.report {
        crate::report::write_report(&outcome.report, path)?;
    }
    Ok(outcome)
}

/// Builds the cycle from one counts record per context. Records are matched
/// by their observable list; shot totals may differ between contexts.
pub fn ingest_counts(
    records: &[CountsRecord],
    observables: &[PauliString],
    convention: Convention,
) -> Result<ExperimentOutcome> {
    let contexts = CycleContexts::new(observables, convention)?;
    let find = |ctx: &MeasurementContext| -> Result<ContextRun> {
        let texts = ctx.texts();
        let record = records
            .iter()
            .find(|r| r.context == texts)
            .ok_or_else(|| Error::MissingContext(ctx.to_string()))?;
        run_from_counts(ctx, record)
    };
    let singles = contexts.singles.iter().map(find).collect::<Result<Vec<_>>>()?;
    let pairs = contexts.pairs.iter().map(find).collect::<Result<Vec<_>>>()?;
    let min_shots = records.iter().map(|r| r.shots).min().ok_or(Error::ZeroShots)?;
    let tolerance = sampled_lp_tolerance(contexts.cycle_len(), min_shots);
    assemble(singles, pairs, convention, tolerance, vec!["INGESTED: counts files".into()])
}

/// Report for literal entropies; there are no distributions, so no LP check.
pub fn ingest_literal(entries: &EntropyEntries, convention: Convention) -> Result<EntropyReport> {
    let n = entries.keys().filter(|k| k.matches('X').count() == 2).count();
    let (pairs, singles) = crate::entropy::cycle_vectors(entries, n)?;
    let mut report = EntropyReport::from_cycle(&pairs, &singles, convention)?;
    report.flags.push("LITERAL: entropies supplied directly, LP check skipped".into());
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealComparison {
    pub label: &'static str,
    pub convention: Convention,
    pub m_ideal: f64,
    pub m_printed: f64,
}

impl IdealComparison {
    pub fn gap(&self) -> f64 {
        self.m_printed - self.m_ideal
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PaperComparison {
    pub m_table3: f64,
    pub m_table4: f64,
    pub table4_pass: bool,
    pub table3_discrepancy: bool,
    pub ideal: Vec<IdealComparison>,
    pub flags: Vec<String>,
    pub classification: String,
}

impl PaperComparison {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Table IV -> M = {:.11} (printed {M_PRINTED_S2:.5}): {}",
            self.m_table4,
            if self.table4_pass { "PASS" } else { "FAIL" }
        );
        let _ = writeln!(
            out,
            "Table III -> M = {:.11} (printed {M_PRINTED_S1:.5}){}",
            self.m_table3,
            if self.table3_discrepancy { ": DISCREPANCY" } else { "" }
        );
        for c in &self.ideal {
            let _ = writeln!(
                out,
                "ideal {} {:<6} M = {:+.11}  printed {:+.5}  gap {:+.5}",
                c.label,
                c.convention.to_string(),
                c.m_ideal,
                c.m_printed,
                c.gap()
            );
        }
        for f in &self.flags {
            let _ = writeln!(out, "flag: {f}");
        }
        let _ = writeln!(out, "classification: {}", self.classification);
        out
    }
}

/// Recomputes M from the stored tables and compares ideal simulations of
/// both presets with the printed hardware values.
pub fn reproduce_paper() -> Result<PaperComparison> {
    let reference = PaperReference::get();
    let m_table3 = evaluate_m(&reference.table3_entropies)?;
    let m_table4 = evaluate_m(&reference.table4_entropies)?;
    let table4_pass = (m_table4 - reference.table5_m_s2).abs() <= 1e-5;
    let table3_discrepancy = (m_table3 - reference.table5_m_s1).abs() > 1e-5;
    let mut flags = Vec::new();
    if table3_discrepancy {
        flags.push(format!(
            "DISCREPANCY: Table III entropies sum to M = {m_table3:.5}, printed value is {:.5}",
            reference.table5_m_s1
        ));
    }
    let mut ideal = Vec::new();
    for (label, base, printed) in [
        ("s1/table1", ExperimentConfig::preset_s1_table1(), reference.table5_m_s1),
        ("s2/table2", ExperimentConfig::preset_s2_table2(), reference.table5_m_s2),
    ] {
        for convention in [Convention::Coarse, Convention::Fine] {
            let mut config = base.clone();
            config.convention = convention;
            let outcome = run_experiment(&config)?;
            ideal.push(IdealComparison {
                label,
                convention,
                m_ideal: outcome.report.m_value,
                m_printed: printed,
            });
        }
    }
    let any_ideal_violation = ideal.iter().any(|c| c.m_ideal > 0.0);
    let s1_coarse = ideal[0].m_ideal;
    let classification = if any_ideal_violation {
        format!(
            "ideal violation present in at least one preset/convention; s1 coarse ideal M = {s1_coarse:.5}"
        )
    } else {
        "no ideal violation; measured positivity consistent with noise/convention".into()
    };
    if s1_coarse < 0.0 {
        flags.push(format!(
            "IDEAL_S1_COARSE_NEGATIVE: ideal M = {s1_coarse:.5}, hardware positivity not reproducible by ideal simulation"
        ));
    }
    Ok(PaperComparison {
        m_table3,
        m_table4,
        table4_pass,
        table3_discrepancy,
        ideal,
        flags,
        classification,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepAxis {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl SweepAxis {
    /// `points` samples of `[start, stop)`; a single point sits at `start`.
    pub fn new(start: f64, stop: f64, points: usize) -> Result<Self> {
        if points == 0 {
            return Err(Error::Config("sweep needs at least one grid point per axis".into()));
        }
        Ok(Self { start, stop, points })
    }

    pub fn fixed(value: f64) -> Self {
        Self {
            start: value,
            stop: value,
            points: 1,
        }
    }

    /// Points `start, start + step, ...` strictly below `stop`.
    pub fn stepped(start: f64, stop: f64, step: f64) -> Result<Self> {
        if step <= 0.0 || stop <= start {
            return Err(Error::Config("sweep step and range must be positive".into()));
        }
        let points = ((stop - start) / step - 1e-9).ceil().max(1.0) as usize;
        Ok(Self {
            start,
            stop: start + step * points as f64,
            points,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / self.points as f64;
        (0..self.points).map(|i| self.start + step * i as f64).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub beta: f64,
    pub m_coarse: f64,
    pub m_fine: Option<f64>,
    pub lp_feasible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// Grid points where the state vector vanishes.
    pub skipped: Vec<(f64, f64)>,
}

impl SweepResult {
    pub fn max_coarse(&self) -> Option<&SweepRow> {
        self.rows.iter().max_by(|a, b| a.m_coarse.total_cmp(&b.m_coarse))
    }

    pub fn max_fine(&self) -> Option<&SweepRow> {
        self.rows
            .iter()
            .filter(|r| r.m_fine.is_some())
            .max_by(|a, b| a.m_fine.unwrap().total_cmp(&b.m_fine.unwrap()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,beta,M_coarse,M_fine,lp_feasible\n");
        for r in &self.rows {
            let fine = r.m_fine.map(|m| format!("{m:.11}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "{:.11},{:.11},{:.11},{},{}",
                r.alpha, r.beta, r.m_coarse, fine, r.lp_feasible
            );
        }
        out
    }
}

/// Exact M in both conventions at every grid point, in parallel.
pub fn sweep(
    family: StateFamily,
    alpha: &SweepAxis,
    beta: &SweepAxis,
    observables: &[PauliString],
) -> Result<SweepResult> {
    if family == StateFamily::Explicit {
        return Err(Error::Config("sweeps need a parametrized state family".into()));
    }
    let contexts = CycleContexts::new(observables, Convention::Coarse)?;
    let grid: Vec<(f64, f64)> = alpha
        .values()
        .into_iter()
        .flat_map(|a| beta.values().into_iter().map(move |b| (a, b)))
        .collect();
    let evaluated: Vec<Result<Option<SweepRow>>> = grid
        .par_iter()
        .map(|&(a, b)| {
            let spec = match family {
                StateFamily::S1 => StatePrepSpec::s1(a, b),
                _ => StatePrepSpec::s2(a, b),
            };
            let state = match prepare_state(&spec) {
                Ok(s) => s,
                Err(Error::NullState) => return Ok(None),
                Err(e) => return Err(e),
            };
            let runs = contexts
                .all()
                .map(|c| exact_run(&state, c, None))
                .collect::<Result<Vec<_>>>()?;
            let (singles, pairs) = runs.split_at(contexts.singles.len());
            let outcome = assemble(singles.to_vec(), pairs.to_vec(), Convention::Coarse, EXACT_LP_TOL, Vec::new())?;
            Ok(Some(SweepRow {
                alpha: a,
                beta: b,
                m_coarse: outcome.m_coarse,
                m_fine: outcome.m_fine,
                lp_feasible: outcome.feasibility.feasible,
            }))
        })
        .collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (point, row) in grid.iter().zip(evaluated) {
        match row? {
            Some(r) => rows.push(r),
            None => skipped.push(*point),
        }
    }
    rows.sort_by(|x, y| x.alpha.total_cmp(&y.alpha).then(x.beta.total_cmp(&y.beta)));
    Ok(SweepResult { rows, skipped })
}

#[derive(Clone, Debug, PartialEq)]
pub struct QasmExport {
    pub written: Vec<(MeasurementContext, PathBuf)>,
    pub unsupported: Vec<(MeasurementContext, String)>,
}

/// File stem for a context, e.g. `pair_XX_XI`.
pub fn context_file_stem(context: &MeasurementContext) -> String {
    let kind = if context.arity() == 1 { "single" } else { "pair" };
    format!("{kind}_{}", context.texts().join("_"))
}

/// One OpenQASM file per context of the config's cycle. Unsupported contexts
/// are listed and the rest are still written.
pub fn export_qasm_suite(config: &ExperimentConfig, dir: &Path) -> Result<QasmExport> {
    let observables = config.observables()?;
    let prep = synthesize_prep_circuit(&config.state.to_spec()?)?;
    let contexts = CycleContexts::new(&observables, config.convention)?;
    std::fs::create_dir_all(dir)?;
    let mut export = QasmExport {
        written: Vec::new(),
        unsupported: Vec::new(),
    };
    for ctx in contexts.all() {
        match export_measurement_circuit(ctx, &prep) {
            Ok(text) => {
                let path = dir.join(format!("{}.qasm", context_file_stem(ctx)));
                std::fs::write(&path, text)?;
                export.written.push((ctx.clone(), path));
            }
            Err(Error::UnsupportedContext(why)) => export.unsupported.push((ctx.clone(), why)),
            Err(e) => return Err(e),
        }
    }
    Ok(export)
}

/// Depolarizing strength that best maps the config's ideal context
/// distributions (in its convention) onto `targets`, keyed like a report.
pub fn fit_noise(config: &ExperimentConfig, targets: &EntropyEntries) -> Result<DepolarizingFit> {
    let mut ideal = config.clone();
    ideal.shots = Shots::Exact;
    ideal.noise = None;
    ideal.outputs.report = None;
    let outcome = run_experiment(&ideal)?;
    let n = outcome.pairs.len();
    let (pair_targets, single_targets) = crate::entropy::cycle_vectors(targets, n)?;
    let dists: Vec<OutcomeDistribution> = outcome
        .singles
        .iter()
        .chain(&outcome.pairs)
        .map(|r| r.distribution(config.convention).clone())
        .collect();
    let targets: Vec<f64> = single_targets.into_iter().chain(pair_targets).collect();
    fit_depolarizing(&dists, &targets)
}

/// Fit of the s1 preset (fine convention) to the first hardware table.
pub fn fit_table3() -> Result<DepolarizingFit> {
    let mut config = ExperimentConfig::preset_s1_table1();
    config.convention = Convention::Fine;
    debug_assert_eq!(config.observables()?, table1_observables());
    debug_assert_eq!((config.state.alpha, config.state.beta), (ALPHA, BETA_S1));
    fit_noise(&config, &PaperReference::get().table3_entropies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::SHOTS;

    #[test]
    fn cycle_contexts_layout() {
        let c = CycleContexts::new(&table1_observables(), Convention::Coarse).unwrap();
        let texts: Vec<String> = c.all().map(|x| x.to_string()).collect();
        assert_eq!(
            texts,
            ["(XX)", "(XI)", "(XZ)", "(ZZ,XX)", "(XX,XI)", "(XI,XZ)", "(XZ,IZ)", "(IZ,ZZ)"]
        );
    }

    #[test]
    fn exact_run_is_seed_independent() {
        let mut a = ExperimentConfig::preset_s2_table2();
        let mut b = a.clone();
        a.seed = 1;
        b.seed = 99;
        assert_eq!(run_experiment(&a).unwrap().report, run_experiment(&b).unwrap().report);
    }

    #[test]
    fn s1_coarse_is_negative_and_flagged() {
        let mut c = ExperimentConfig::preset_s1_table1();
        c.convention = Convention::Coarse;
        let out = run_experiment(&c).unwrap();
        assert!(out.report.m_value < -2.4);
        assert!(out.report.flags.iter().any(|f| f.starts_with("NO_VIOLATION")));
    }

    #[test]
    fn fine_report_carries_coarse_m() {
        let out = run_experiment(&ExperimentConfig::preset_s1_table1()).unwrap();
        assert!(out.report.flags.iter().any(|f| f.starts_with("COARSE_M")));
        assert!(out.m_fine.is_some());
        assert_eq!(out.report.m_value, out.m_fine.unwrap());
    }

    #[test]
    fn sampled_run_is_reproducible() {
        let [c, _] = ExperimentConfig::hardware_presets();
        let a = run_experiment(&c).unwrap();
        let b = run_experiment(&c).unwrap();
        assert_eq!(a.report, b.report);
        assert!(a.runs().all(|r| r.counts.as_ref().unwrap().total() == SHOTS));
    }

    #[test]
    fn ingest_names_missing_context() {
        let err = ingest_counts(&[], &table1_observables(), Convention::Coarse).unwrap_err();
        assert!(matches!(err, Error::MissingContext(ref c) if c == "(XX)"), "{err}");
    }

    #[test]
    fn point_mass_counts_give_zero() {
        let c = CycleContexts::new(&table1_observables(), Convention::Coarse).unwrap();
        let records: Vec<CountsRecord> = c
            .all()
            .map(|ctx| CountsRecord {
                context: ctx.texts(),
                shots: 10,
                counts: [("00".to_string(), 10)].into_iter().collect(),
            })
            .collect();
        let out = ingest_counts(&records, &table1_observables(), Convention::Coarse).unwrap();
        assert_eq!(out.report.m_value, 0.0);
    }

    #[test]
    fn literal_table4() {
        let r = ingest_literal(&PaperReference::get().table4_entropies, Convention::Fine).unwrap();
        assert!((r.m_value - 0.12597).abs() < 1e-5);
    }

    #[test]
    fn sweep_axis_values() {
        assert_eq!(SweepAxis::fixed(1.5).values(), [1.5]);
        let s = SweepAxis::stepped(0.0, std::f64::consts::PI, 0.05).unwrap();
        assert_eq!(s.points, 63);
        assert!(s.values().last().unwrap() < &std::f64::consts::PI);
    }
}
