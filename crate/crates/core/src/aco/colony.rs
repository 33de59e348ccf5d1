//! The iteration loop shared by every colony variant.
//!
//! Each iteration constructs `m` tours, records the iteration best and worst,
//! updates the global best, evaporates, and then hands the pheromone matrix
//! to an [`UpdatePolicy`]. The policies differ only in what they deposit.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aco::config::{ColonyConfig, StartMode};
use crate::aco::construct::ChoiceInfo;
use crate::aco::pheromone::{init_pheromone, PheromoneMatrix, UpdateCounters};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::meas::MeasPolicy;
use crate::tour::Tour;

/// What a policy sees after the tours of one iteration are built.
#[derive(Debug)]
pub struct IterationContext<'a> {
    /// 1-based iteration number.
    pub iteration: usize,
    pub tours: &'a [Tour],
    pub iteration_best: &'a Tour,
    pub iteration_worst: &'a Tour,
    /// Best tour found so far, this iteration included.
    pub global_best: &'a Tour,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct UpdateOutcome {
    pub escaped: bool,
}

/// Pheromone update applied after evaporation in every iteration.
pub trait UpdatePolicy {
    fn update(
        &mut self,
        ph: &mut PheromoneMatrix,
        ctx: &IterationContext<'_>,
    ) -> Result<UpdateOutcome>;
}

/// Ant System: every ant deposits `Q/L` on its own tour.
#[derive(Debug, Clone)]
pub struct AntSystemPolicy {
    pub q: f64,
}

impl UpdatePolicy for AntSystemPolicy {
    fn update(
        &mut self,
        ph: &mut PheromoneMatrix,
        ctx: &IterationContext<'_>,
    ) -> Result<UpdateOutcome> {
        ph.deposit_as(ctx.tours, self.q);
        Ok(UpdateOutcome::default())
    }
}

/// Elite Ant System: the Ant System deposit plus `e·Q/L*` on the global best.
#[derive(Debug, Clone)]
pub struct EliteAntSystemPolicy {
    pub q: f64,
    pub elite_weight: f64,
}

impl UpdatePolicy for EliteAntSystemPolicy {
    fn update(
        &mut self,
        ph: &mut PheromoneMatrix,
        ctx: &IterationContext<'_>,
    ) -> Result<UpdateOutcome> {
        ph.deposit_as(ctx.tours, self.q);
        ph.deposit_elite(ctx.global_best, self.elite_weight, self.q);
        Ok(UpdateOutcome::default())
    }
}

/// Outcome of one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_tour: Tour,
    /// Shortest tour length of each iteration.
    pub best_history: Vec<f64>,
    /// Longest tour length of each iteration.
    pub worst_history: Vec<f64>,
    /// 1-based iteration in which `best_tour` was first constructed.
    pub last_improvement_iter: usize,
    pub escapes_triggered: usize,
    /// Tours constructed.
    pub evaluations: usize,
    pub counters: UpdateCounters,
    /// Zero-length edges whose visibility had to be clamped.
    pub clamped_edges: usize,
    pub elapsed: Duration,
}

impl RunResult {
    /// Running minimum of `best_history`.
    pub fn best_so_far(&self) -> Vec<f64> {
        self.best_history
            .iter()
            .scan(f64::INFINITY, |m, &v| {
                *m = m.min(v);
                Some(*m)
            })
            .collect()
    }
}

/// Runs the shared loop with an arbitrary update policy. `observer` is called
/// with the pheromone matrix at the end of every iteration.
pub fn run_with_policy<P, R, F>(
    inst: &Instance,
    cfg: &ColonyConfig,
    policy: &mut P,
    rng: &mut R,
    mut observer: F,
) -> Result<RunResult>
where
    P: UpdatePolicy + ?Sized,
    R: Rng + ?Sized,
    F: FnMut(usize, &PheromoneMatrix),
{
    cfg.validate()?;
    let started = Instant::now();
    let n = inst.n();
    let mut ph = init_pheromone(inst, cfg)?;
    let mut choice = ChoiceInfo::new(inst, cfg.beta);
    let mut scratch = Vec::with_capacity(n);
    let mut tours = Vec::with_capacity(cfg.ants);
    let mut global_best: Option<Tour> = None;
    let mut last_improvement_iter = 0;
    let mut best_history = Vec::with_capacity(cfg.max_iterations);
    let mut worst_history = Vec::with_capacity(cfg.max_iterations);
    let mut escapes = 0;

    for iteration in 1..=cfg.max_iterations {
        choice.refresh(&ph, cfg.alpha);
        tours.clear();
        for k in 0..cfg.ants {
            let start = match cfg.start_mode {
                StartMode::RoundRobin => k % n,
                StartMode::Random => rng.random_range(0..n),
            };
            tours.push(choice.construct(inst, start, rng, &mut scratch)?);
        }

        // First-found wins ties, both within and across iterations.
        let mut best_idx = 0;
        let mut worst_idx = 0;
        for (k, t) in tours.iter().enumerate() {
            if t.length() < tours[best_idx].length() {
                best_idx = k;
            }
            if t.length() > tours[worst_idx].length() {
                worst_idx = k;
            }
        }
        best_history.push(tours[best_idx].length());
        worst_history.push(tours[worst_idx].length());
        if global_best
            .as_ref()
            .is_none_or(|g| tours[best_idx].length() < g.length())
        {
            global_best = Some(tours[best_idx].clone());
            last_improvement_iter = iteration;
        }

        ph.evaporate(cfg.rho);
        let ctx = IterationContext {
            iteration,
            tours: &tours,
            iteration_best: &tours[best_idx],
            iteration_worst: &tours[worst_idx],
            global_best: global_best.as_ref().expect("set above"),
        };
        if policy.update(&mut ph, &ctx)?.escaped {
            escapes += 1;
        }
        observer(iteration, &ph);
    }

    Ok(RunResult {
        best_tour: global_best.expect("max_iterations >= 1"),
        best_history,
        worst_history,
        last_improvement_iter,
        escapes_triggered: escapes,
        evaluations: cfg.max_iterations * cfg.ants,
        counters: ph.counters(),
        clamped_edges: inst.zero_length_edges(),
        elapsed: started.elapsed(),
    })
}

/// Ant System.
pub fn run_as<R: Rng + ?Sized>(
    inst: &Instance,
    cfg: &ColonyConfig,
    rng: &mut R,
) -> Result<RunResult> {
    let mut policy = AntSystemPolicy { q: cfg.q_deposit };
    run_with_policy(inst, cfg, &mut policy, rng, |_, _| {})
}

/// Elite Ant System.
pub fn run_eas<R: Rng + ?Sized>(
    inst: &Instance,
    cfg: &ColonyConfig,
    rng: &mut R,
) -> Result<RunResult> {
    let mut policy = EliteAntSystemPolicy {
        q: cfg.q_deposit,
        elite_weight: cfg.elite_weight,
    };
    run_with_policy(inst, cfg, &mut policy, rng, |_, _| {})
}

/// Modified Elite Ant System: global-only update plus stagnation escape.
pub fn run_meas<R: Rng + ?Sized>(
    inst: &Instance,
    cfg: &ColonyConfig,
    rng: &mut R,
) -> Result<RunResult> {
    let mut policy = MeasPolicy::new(cfg);
    run_with_policy(inst, cfg, &mut policy, rng, |_, _| {})
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    As,
    Eas,
    Meas,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::As, Algorithm::Eas, Algorithm::Meas];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::As => "as",
            Algorithm::Eas => "eas",
            Algorithm::Meas => "meas",
        }
    }

    pub fn run<R: Rng + ?Sized>(
        self,
        inst: &Instance,
        cfg: &ColonyConfig,
        rng: &mut R,
    ) -> Result<RunResult> {
        match self {
            Algorithm::As => run_as(inst, cfg, rng),
            Algorithm::Eas => run_eas(inst, cfg, rng),
            Algorithm::Meas => run_meas(inst, cfg, rng),
        }
    }

    /// Runs with a ChaCha8 generator seeded from `cfg.seed`.
    pub fn solve(self, inst: &Instance, cfg: &ColonyConfig) -> Result<RunResult> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        self.run(inst, cfg, &mut rng)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "as" => Ok(Algorithm::As),
            "eas" => Ok(Algorithm::Eas),
            "meas" => Ok(Algorithm::Meas),
            other => Err(Error::InvalidConfig(format!(
                "unknown algorithm {other:?} (expected as, eas or meas)"
            ))),
        }
    }
}
