//! Seeded multi-run comparisons of the colony solvers.
//!
//! Every `(instance, algorithm)` cell is run `R` times with seeds
//! `base_seed + 0 … base_seed + R − 1`. The seeds do not depend on the
//! algorithm, so all solvers face the same random streams (paired design),
//! and output order never depends on scheduling.

mod csv_out;
mod optima;
mod overrides;
mod specfile;

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::aco::{Algorithm, ColonyConfig};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::oracle::{held_karp_exact, HELD_KARP_MAX_N};
use crate::tsplib::read_tsplib;

pub use csv_out::{emit_csv, RUNS_HEADER, SUMMARY_HEADER};
pub use optima::{parse_optima, read_optima};
pub use overrides::ConfigOverrides;
pub use specfile::{parse_random_source, parse_spec_file, read_spec_file};

/// Where an instance comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSource {
    File(PathBuf),
    /// `n` uniform points from [`Instance::random_uniform`].
    Random {
        n: usize,
        seed: u64,
    },
    Inline(Instance),
}

impl InstanceSource {
    pub fn load(&self) -> Result<Instance> {
        match self {
            InstanceSource::File(path) => read_tsplib(path),
            InstanceSource::Random { n, seed } => Instance::random_uniform(*n, *seed),
            InstanceSource::Inline(inst) => Ok(inst.clone()),
        }
    }

    fn is_generated(&self) -> bool {
        matches!(self, InstanceSource::Random { .. })
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub instances: Vec<InstanceSource>,
    pub algorithms: Vec<Algorithm>,
    pub runs_per_cell: usize,
    pub base_seed: u64,
    /// Applied to every algorithm, on top of [`ColonyConfig::for_instance`].
    pub common: ConfigOverrides,
    /// Applied after `common`.
    pub per_algorithm: BTreeMap<Algorithm, ConfigOverrides>,
    /// Best-known lengths by instance name.
    pub known_optima: BTreeMap<String, f64>,
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        ExperimentSpec {
            instances: Vec::new(),
            algorithms: Algorithm::ALL.to_vec(),
            runs_per_cell: 10,
            base_seed: 0,
            common: ConfigOverrides::default(),
            per_algorithm: BTreeMap::new(),
            known_optima: BTreeMap::new(),
            jobs: 1,
        }
    }
}

impl ExperimentSpec {
    /// Solver configuration for one cell, seed left at its default.
    pub fn config_for(&self, inst: &Instance, algo: Algorithm) -> ColonyConfig {
        let mut cfg = ColonyConfig::for_instance(inst.n());
        self.common.apply(&mut cfg);
        if let Some(o) = self.per_algorithm.get(&algo) {
            o.apply(&mut cfg);
        }
        cfg
    }
}

/// One solver run inside an experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub instance: String,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub best_length: f64,
    pub iters_to_best: usize,
    pub escapes: usize,
    pub time_s: f64,
}

/// Aggregate over the `R` runs of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellStats {
    pub instance: String,
    pub algorithm: Algorithm,
    pub best: f64,
    pub mean: f64,
    /// Population standard deviation of the best-of-run lengths.
    pub std: f64,
    /// Present when the instance optimum is known.
    pub mean_relative_error: Option<f64>,
    pub mean_time: f64,
    pub mean_iterations_to_best: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub cells: Vec<CellStats>,
    pub runs: Vec<RunRecord>,
    /// Optimum used for each instance, when known.
    pub optima: BTreeMap<String, f64>,
}

/// `(found − optimum) / optimum`.
///
/// A negative value means the recorded optimum is wrong and is reported as
/// [`Error::BeatOptimum`].
pub fn relative_error(found: f64, optimum: f64) -> Result<f64> {
    if optimum.is_nan() || optimum <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "optimum must be positive, got {optimum}"
        )));
    }
    if found < optimum {
        return Err(Error::BeatOptimum { found, optimum });
    }
    Ok((found - optimum) / optimum)
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    if spec.runs_per_cell == 0 {
        return Err(Error::InvalidConfig(
            "runs per cell must be at least 1".into(),
        ));
    }
    if spec.algorithms.is_empty() {
        return Err(Error::InvalidConfig("no algorithms selected".into()));
    }

    // Everything that can fail for data reasons fails here, before any run.
    let instances = spec
        .instances
        .iter()
        .map(InstanceSource::load)
        .collect::<Result<Vec<_>>>()?;
    let mut optima = BTreeMap::new();
    for (src, inst) in spec.instances.iter().zip(&instances) {
        if let Some(&opt) = spec.known_optima.get(inst.name()) {
            optima.insert(inst.name().to_string(), opt);
        } else if src.is_generated() && inst.n() <= HELD_KARP_MAX_N {
            optima.insert(inst.name().to_string(), held_karp_exact(inst)?.length());
        }
    }
    let mut tasks = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        for &algo in &spec.algorithms {
            let cfg = spec.config_for(inst, algo);
            cfg.validate()?;
            for r in 0..spec.runs_per_cell {
                let seed = spec.base_seed.wrapping_add(r as u64);
                tasks.push((i, algo, cfg.clone().with_seed(seed)));
            }
        }
    }

    let run_one = |(i, algo, cfg): &(usize, Algorithm, ColonyConfig)| -> Result<RunRecord> {
        let inst = &instances[*i];
        let res = algo.solve(inst, cfg)?;
        Ok(RunRecord {
            instance: inst.name().to_string(),
            algorithm: *algo,
            seed: cfg.seed,
            best_length: res.best_tour.length(),
            iters_to_best: res.last_improvement_iter,
            escapes: res.escapes_triggered,
            time_s: res.elapsed.as_secs_f64(),
        })
    };
    let runs: Vec<RunRecord> = if spec.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(run_one).collect::<Result<_>>())?
    } else {
        tasks.iter().map(run_one).collect::<Result<_>>()?
    };

    let cells = runs
        .chunks(spec.runs_per_cell)
        .map(|chunk| summarize(chunk, optima.get(&chunk[0].instance).copied()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport {
        cells,
        runs,
        optima,
    })
}

fn summarize(runs: &[RunRecord], optimum: Option<f64>) -> Result<CellStats> {
    let r = runs.len() as f64;
    let lengths = runs.iter().map(|x| x.best_length);
    let best = lengths.clone().fold(f64::INFINITY, f64::min);
    let mean = lengths.clone().sum::<f64>() / r;
    let std = (lengths.map(|v| (v - mean) * (v - mean)).sum::<f64>() / r).sqrt();
    let mean_relative_error = match optimum {
        Some(opt) => {
            let mut total = 0.0;
            for run in runs {
                total += relative_error(run.best_length, opt)?;
            }
            Some(total / r)
        }
        None => None,
    };
    Ok(CellStats {
        instance: runs[0].instance.clone(),
        algorithm: runs[0].algorithm,
        best,
        mean,
        std,
        mean_relative_error,
        mean_time: runs.iter().map(|x| x.time_s).sum::<f64>() / r,
        mean_iterations_to_best: runs.iter().map(|x| x.iters_to_best as f64).sum::<f64>() / r,
    })
}
