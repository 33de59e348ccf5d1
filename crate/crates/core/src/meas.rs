//! Modified Elite Ant System.
//!
//! No ant deposits pheromone on its own tour. After evaporation each
//! iteration applies a single global update: the edges of the best tour are
//! reinforced by `w⁺·Q/L_best`, then the edges of the worst tour are scaled
//! by `1 − w⁻`, then the floor is enforced. A stagnation monitor watches the
//! global best; when it stops improving for `S` iterations the trails are
//! blended toward their initial level to restore exploration.

use crate::aco::colony::{IterationContext, UpdateOutcome, UpdatePolicy};
use crate::aco::config::ColonyConfig;
use crate::aco::pheromone::PheromoneMatrix;
use crate::error::{Error, Result};
use crate::tour::Tour;

/// Which tour a global update targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Best (or worst) tour seen in the whole run so far.
    Global,
    /// Best (or worst) tour of the current iteration.
    Iteration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasParams {
    /// w⁺ > 0: multiplier on `Q/L_best` for each best-tour edge.
    pub reinforce_weight: f64,
    /// w⁻ ∈ [0, 1): fraction of pheromone removed from each worst-tour edge.
    pub penalty_weight: f64,
    /// S ≥ 1 iterations without improvement before an escape; `None`
    /// disables escapes.
    pub stagnation_window: Option<usize>,
    /// Relative improvement ε ≥ 0 that counts as progress.
    pub improvement_tolerance: f64,
    /// λ ∈ (0, 1]: blend factor toward the initial trail level on escape.
    pub escape_blend: f64,
    pub best_scope: Scope,
    pub worst_scope: Scope,
}

impl MeasParams {
    pub const DEFAULT_PENALTY: f64 = 0.2;
    pub const DEFAULT_WINDOW: usize = 30;
    pub const DEFAULT_TOLERANCE: f64 = 1e-6;
    pub const DEFAULT_BLEND: f64 = 0.5;

    /// Defaults with the given reinforcement weight: w⁻ = 0.2, S = 30,
    /// ε = 10⁻⁶, λ = 0.5, iteration-best reinforcement and iteration-worst
    /// penalty.
    pub fn with_reinforcement(reinforce_weight: f64) -> Self {
        MeasParams {
            reinforce_weight,
            penalty_weight: Self::DEFAULT_PENALTY,
            stagnation_window: Some(Self::DEFAULT_WINDOW),
            improvement_tolerance: Self::DEFAULT_TOLERANCE,
            escape_blend: Self::DEFAULT_BLEND,
            best_scope: Scope::Iteration,
            worst_scope: Scope::Iteration,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if !(self.reinforce_weight.is_finite() && self.reinforce_weight > 0.0) {
            return bad(format!("w_plus must be > 0, got {}", self.reinforce_weight));
        }
        if !(0.0..1.0).contains(&self.penalty_weight) {
            return bad(format!(
                "w_minus must lie in [0, 1), got {}",
                self.penalty_weight
            ));
        }
        if self.stagnation_window == Some(0) {
            return bad("stagnation window must be at least 1".to_string());
        }
        if !(self.improvement_tolerance.is_finite() && self.improvement_tolerance >= 0.0) {
            return bad(format!(
                "improvement tolerance must be >= 0, got {}",
                self.improvement_tolerance
            ));
        }
        if !(self.escape_blend > 0.0 && self.escape_blend <= 1.0) {
            return bad(format!(
                "escape blend must lie in (0, 1], got {}",
                self.escape_blend
            ));
        }
        Ok(())
    }
}

/// Counts iterations without meaningful improvement of the global best.
///
/// The first observation only sets the reference length. Every later
/// observation either improves on the reference by more than ε (relative),
/// which resets the count, or increments it. Reaching the window fires once
/// and starts a fresh count from the current best.
#[derive(Debug, Clone, PartialEq)]
pub struct StagnationMonitor {
    window: Option<usize>,
    tolerance: f64,
    reference: Option<f64>,
    iterations_since_improvement: usize,
}

impl StagnationMonitor {
    pub fn new(window: Option<usize>, tolerance: f64) -> Self {
        StagnationMonitor {
            window,
            tolerance,
            reference: None,
            iterations_since_improvement: 0,
        }
    }

    pub fn from_params(p: &MeasParams) -> Self {
        Self::new(p.stagnation_window, p.improvement_tolerance)
    }

    pub fn iterations_since_improvement(&self) -> usize {
        self.iterations_since_improvement
    }

    pub fn reference(&self) -> Option<f64> {
        self.reference
    }

    /// Feeds the global best length after one iteration; `true` means the
    /// run has stagnated and should escape.
    pub fn observe(&mut self, current_best: f64) -> bool {
        let Some(reference) = self.reference else {
            self.reference = Some(current_best);
            return false;
        };
        let improved = if reference > 0.0 {
            (reference - current_best) / reference > self.tolerance
        } else {
            current_best < reference
        };
        if improved {
            self.reference = Some(current_best);
            self.iterations_since_improvement = 0;
            return false;
        }
        self.iterations_since_improvement += 1;
        match self.window {
            Some(s) if self.iterations_since_improvement >= s => {
                self.iterations_since_improvement = 0;
                self.reference = Some(current_best);
                true
            }
            _ => false,
        }
    }
}

/// The global-only update. Evaporation is the caller's job.
///
/// Gain is applied before the penalty, so an edge on both tours ends at
/// `(τ + w⁺·Q/L_best)·(1 − w⁻)`; the floor is applied last.
pub fn global_update_meas(
    ph: &mut PheromoneMatrix,
    best: &Tour,
    worst: &Tour,
    p: &MeasParams,
    q: f64,
) -> Result<()> {
    for t in [best, worst] {
        if t.len() != ph.n() {
            return Err(Error::DimensionMismatch {
                expected: ph.n(),
                found: t.len(),
            });
        }
    }
    if best.length() > worst.length() {
        return Err(Error::InvalidConfig(format!(
            "best tour ({}) is longer than worst tour ({})",
            best.length(),
            worst.length()
        )));
    }
    ph.add_along(best, p.reinforce_weight * q / best.length());
    ph.scale_along(worst, 1.0 - p.penalty_weight);
    ph.clamp_to_floor();
    let c = ph.counters_mut();
    c.reinforcements += 1;
    c.penalties += 1;
    Ok(())
}

/// Blends every trail toward the initial level:
/// `τ ← (1 − λ)·τ + λ·τ₀`.
pub fn escape(ph: &mut PheromoneMatrix, p: &MeasParams) {
    let lambda = p.escape_blend;
    let target = lambda * ph.tau_init();
    let floor = ph.tau_min();
    ph.map_off_diagonal(|t| ((1.0 - lambda) * t + target).max(floor));
    ph.counters_mut().escapes += 1;
}

/// [`UpdatePolicy`] implementing the MEAS iteration.
#[derive(Debug, Clone)]
pub struct MeasPolicy {
    params: MeasParams,
    q: f64,
    monitor: StagnationMonitor,
    worst_so_far: Option<Tour>,
}

impl MeasPolicy {
    pub fn new(cfg: &ColonyConfig) -> Self {
        MeasPolicy {
            params: cfg.meas.clone(),
            q: cfg.q_deposit,
            monitor: StagnationMonitor::from_params(&cfg.meas),
            worst_so_far: None,
        }
    }

    pub fn monitor(&self) -> &StagnationMonitor {
        &self.monitor
    }
}

impl UpdatePolicy for MeasPolicy {
    fn update(
        &mut self,
        ph: &mut PheromoneMatrix,
        ctx: &IterationContext<'_>,
    ) -> Result<UpdateOutcome> {
        let best = match self.params.best_scope {
            Scope::Global => ctx.global_best,
            Scope::Iteration => ctx.iteration_best,
        };
        let worst = match self.params.worst_scope {
            Scope::Iteration => ctx.iteration_worst,
            Scope::Global => {
                if self
                    .worst_so_far
                    .as_ref()
                    .is_none_or(|w| ctx.iteration_worst.length() > w.length())
                {
                    self.worst_so_far = Some(ctx.iteration_worst.clone());
                }
                self.worst_so_far.as_ref().expect("set above")
            }
        };
        global_update_meas(ph, best, worst, &self.params, self.q)?;
        let escaped = self.monitor.observe(ctx.global_best.length());
        if escaped {
            escape(ph, &self.params);
        }
        Ok(UpdateOutcome { escaped })
    }
}
