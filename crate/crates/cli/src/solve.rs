use std::fmt;
use std::path::PathBuf;

use antsys_core::experiment::ConfigOverrides;
use antsys_core::{read_tsplib, Algorithm, ColonyConfig, Scope};
use anyhow::Context;
use clap::Args;
use serde::Serialize;

use crate::{CmdResult, Failure};

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// TSPLIB instance file.
    instance: PathBuf,
    /// Solver: as, eas or meas.
    #[arg(long, default_value = "meas", value_parser = parse_algorithm)]
    algo: Algorithm,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    iters: usize,
    /// Colony size [default: min(n, 50)].
    #[arg(long)]
    ants: Option<usize>,
    /// Pheromone exponent [default: 1].
    #[arg(long)]
    alpha: Option<f64>,
    /// Visibility exponent [default: 3].
    #[arg(long)]
    beta: Option<f64>,
    /// Evaporation rate [default: 0.1].
    #[arg(long)]
    rho: Option<f64>,
    /// Deposit constant Q [default: 1].
    #[arg(long)]
    q: Option<f64>,
    /// Elite weight e, eas and meas only [default: ceil(n/4)].
    #[arg(long)]
    elite: Option<f64>,
    /// Start each ant at a random node instead of round-robin.
    #[arg(long)]
    random_starts: bool,
    /// Best-tour reinforcement weight, meas only [default: the elite weight].
    #[arg(long)]
    w_plus: Option<f64>,
    /// Worst-tour penalty in [0, 1), meas only [default: 0.2].
    #[arg(long)]
    w_minus: Option<f64>,
    /// Stagnation window in iterations, or `inf` to disable escapes, meas only [default: 30].
    #[arg(long, value_parser = parse_window)]
    stag_window: Option<Window>,
    /// Relative improvement that resets the stagnation count, meas only [default: 1e-6].
    #[arg(long)]
    tolerance: Option<f64>,
    /// Escape blend toward the initial trail in (0, 1], meas only [default: 0.5].
    #[arg(long)]
    escape_blend: Option<f64>,
    /// Which best tour meas reinforces: iteration or global [default: iteration].
    #[arg(long, value_parser = parse_scope)]
    best_scope: Option<Scope>,
    /// Which worst tour meas penalizes: iteration or global [default: iteration].
    #[arg(long, value_parser = parse_scope)]
    worst_scope: Option<Scope>,
    /// Print one JSON record instead of the text report.
    #[arg(long)]
    json: bool,
}

pub(crate) fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: antsys_core::Error| e.to_string())
}

/// Stagnation window; `None` is `inf`.
#[derive(Debug, Clone, Copy)]
struct Window(Option<usize>);

fn parse_window(s: &str) -> Result<Window, String> {
    match s {
        "inf" => Ok(Window(None)),
        _ => s
            .parse()
            .map(|w| Window(Some(w)))
            .map_err(|_| format!("expected a count or `inf`, got {s:?}")),
    }
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    match s {
        "iteration" => Ok(Scope::Iteration),
        "global" => Ok(Scope::Global),
        _ => Err(format!("expected `iteration` or `global`, got {s:?}")),
    }
}

impl SolveArgs {
    fn check_flags(&self) -> Result<(), Failure> {
        if self.algo == Algorithm::As && self.elite.is_some() {
            return Err(Failure::Usage(
                "--elite has no effect with --algo as".into(),
            ));
        }
        if self.algo != Algorithm::Meas {
            let meas_only = [
                ("--w-plus", self.w_plus.is_some()),
                ("--w-minus", self.w_minus.is_some()),
                ("--stag-window", self.stag_window.is_some()),
                ("--tolerance", self.tolerance.is_some()),
                ("--escape-blend", self.escape_blend.is_some()),
                ("--best-scope", self.best_scope.is_some()),
                ("--worst-scope", self.worst_scope.is_some()),
            ];
            if let Some((flag, _)) = meas_only.iter().find(|(_, set)| *set) {
                return Err(Failure::Usage(format!(
                    "{flag} applies to --algo meas only"
                )));
            }
        }
        Ok(())
    }

    fn config(&self, n: usize) -> ColonyConfig {
        let overrides = ConfigOverrides {
            iterations: Some(self.iters),
            ants: self.ants,
            alpha: self.alpha,
            beta: self.beta,
            rho: self.rho,
            q_deposit: self.q,
            elite: self.elite,
            w_plus: self.w_plus,
            w_minus: self.w_minus,
            stagnation_window: self.stag_window.map(|w| w.0),
            tolerance: self.tolerance,
            escape_blend: self.escape_blend,
            random_starts: Some(self.random_starts),
            best_scope: self.best_scope,
            worst_scope: self.worst_scope,
        };
        let mut cfg = ColonyConfig::for_instance(n).with_seed(self.seed);
        overrides.apply(&mut cfg);
        cfg
    }
}

/// Feeds both the text and the JSON output.
#[derive(Debug, Serialize)]
struct SolveReport {
    instance: String,
    algorithm: String,
    seed: u64,
    best_length: f64,
    tour: Vec<usize>,
    iterations_to_best: usize,
    escapes: usize,
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance:           {}", self.instance)?;
        writeln!(f, "algorithm:          {}", self.algorithm)?;
        writeln!(f, "seed:               {}", self.seed)?;
        writeln!(f, "best_length:        {}", self.best_length)?;
        writeln!(f, "iterations_to_best: {}", self.iterations_to_best)?;
        writeln!(f, "escapes:            {}", self.escapes)?;
        let order: Vec<String> = self.tour.iter().map(usize::to_string).collect();
        writeln!(f, "tour:               {}", order.join(" "))
    }
}

/// Same cycle, rotated to begin at node 0.
fn from_node_zero(order: &[usize]) -> Vec<usize> {
    let mut v = order.to_vec();
    if let Some(k) = v.iter().position(|&c| c == 0) {
        v.rotate_left(k);
    }
    v
}

pub fn run(args: SolveArgs) -> CmdResult {
    args.check_flags()?;
    let inst = read_tsplib(&args.instance)?;
    let cfg = args.config(inst.n());
    cfg.validate()?;
    let res = args
        .algo
        .solve(&inst, &cfg)
        .with_context(|| format!("solving {}", args.instance.display()))?;
    let report = SolveReport {
        instance: inst.name().to_string(),
        algorithm: args.algo.to_string(),
        seed: args.seed,
        best_length: res.best_tour.length(),
        tour: from_node_zero(res.best_tour.order()),
        iterations_to_best: res.last_improvement_iter,
        escapes: res.escapes_triggered,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string(&report).map_err(anyhow::Error::from)?
        );
    } else {
        print!("{report}");
    }
    Ok(())
}
