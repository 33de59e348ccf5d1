use std::path::PathBuf;

use antsys_core::experiment::{
    emit_csv, parse_random_source, read_optima, read_spec_file, run_experiment, CellStats,
    ExperimentSpec, InstanceSource,
};
use antsys_core::Algorithm;
use anyhow::Context;
use clap::Args;

use crate::solve::parse_algorithm;
use crate::{CmdResult, Failure};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// key = value experiment file; the flags below extend or override it.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// TSPLIB instance file (repeatable).
    #[arg(long)]
    instance: Vec<PathBuf>,
    /// Generated instance as n:seed (repeatable).
    #[arg(long)]
    random: Vec<String>,
    /// Comma-separated solvers [default: as,eas,meas].
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm)]
    algos: Vec<Algorithm>,
    /// Runs per instance and solver [default: 10].
    #[arg(long)]
    runs: Option<usize>,
    /// Base seed; run r uses seed + r [default: 0].
    #[arg(long)]
    seed: Option<u64>,
    /// Iterations per run [default: 1000].
    #[arg(long)]
    iters: Option<usize>,
    /// Best-known lengths file, `name length` per line (repeatable).
    #[arg(long)]
    optima: Vec<PathBuf>,
    /// Directory for summary.csv and runs.csv.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Worker threads [default: 1].
    #[arg(long)]
    jobs: Option<usize>,
}

impl BenchArgs {
    fn experiment(&self) -> Result<ExperimentSpec, Failure> {
        let mut spec = match &self.spec {
            Some(path) => read_spec_file(path)?,
            None => ExperimentSpec::default(),
        };
        spec.instances
            .extend(self.instance.iter().cloned().map(InstanceSource::File));
        for r in &self.random {
            spec.instances.push(parse_random_source(r)?);
        }
        if !self.algos.is_empty() {
            spec.algorithms = self.algos.clone();
        }
        if let Some(v) = self.runs {
            spec.runs_per_cell = v;
        }
        if let Some(v) = self.seed {
            spec.base_seed = v;
        }
        if let Some(v) = self.iters {
            spec.common.iterations = Some(v);
        }
        if let Some(v) = self.jobs {
            spec.jobs = v;
        }
        for path in &self.optima {
            spec.known_optima.extend(read_optima(path)?);
        }
        if spec.instances.is_empty() {
            return Err(Failure::Usage(
                "no instances: pass --spec, --instance or --random".into(),
            ));
        }
        Ok(spec)
    }
}

pub fn run(args: BenchArgs) -> CmdResult {
    let spec = args.experiment()?;
    let report = run_experiment(&spec)?;
    let (summary, runs) = emit_csv(&report.cells, &report.runs)?;
    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;
    for (name, text) in [("summary.csv", summary), ("runs.csv", runs)] {
        let path = args.out.join(name);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    print_table(&report.cells);
    Ok(())
}

fn print_table(cells: &[CellStats]) {
    let width = cells
        .iter()
        .map(|c| c.instance.len())
        .max()
        .unwrap_or(0)
        .max(8);
    println!(
        "{:<width$}  {:<4}  {:>12}  {:>12}  {:>10}  {:>9}  {:>9}",
        "instance", "algo", "best", "mean", "std", "rel_err%", "time_s"
    );
    for c in cells {
        let rel = c
            .mean_relative_error
            .map(|v| format!("{:.3}", 100.0 * v))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<width$}  {:<4}  {:>12.2}  {:>12.2}  {:>10.2}  {:>9}  {:>9.4}",
            c.instance,
            c.algorithm.name(),
            c.best,
            c.mean,
            c.std,
            rel,
            c.mean_time
        );
    }
}
