use crate::error::{Error, Result};
use crate::meas::MeasParams;

/// Default cap on the number of ants per iteration.
pub const MAX_DEFAULT_ANTS: usize = 50;

/// How ants pick their starting node each iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartMode {
    /// Ant `k` starts at node `k mod n`.
    #[default]
    RoundRobin,
    /// Every ant starts at a uniformly random node.
    Random,
}

/// Tunables shared by the AS, EAS and MEAS solvers.
///
/// Fields are public so callers can override individual values; every solver
/// entry point calls [`ColonyConfig::validate`] before doing any work.
#[derive(Debug, Clone, PartialEq)]
pub struct ColonyConfig {
    /// Pheromone exponent, ≥ 0.
    pub alpha: f64,
    /// Heuristic (inverse distance) exponent, ≥ 0.
    pub beta: f64,
    /// Evaporation rate in `[0, 1]`.
    pub rho: f64,
    /// Ants per iteration, ≥ 1.
    pub ants: usize,
    /// Deposit constant `Q`, > 0.
    pub q_deposit: f64,
    /// Elite weight `e` for the EAS best-tour deposit, ≥ 0.
    pub elite_weight: f64,
    pub max_iterations: usize,
    pub seed: u64,
    pub start_mode: StartMode,
    pub meas: MeasParams,
}

impl ColonyConfig {
    /// Defaults for an `n`-node instance: α=1, β=3, ρ=0.1, Q=1,
    /// m = min(n, 50), e = ⌈n/4⌉, 1000 iterations, seed 0.
    /// MEAS reinforcement reuses the elite weight.
    pub fn for_instance(n: usize) -> Self {
        let elite_weight = n.div_ceil(4) as f64;
        ColonyConfig {
            alpha: 1.0,
            beta: 3.0,
            rho: 0.1,
            ants: n.clamp(1, MAX_DEFAULT_ANTS),
            q_deposit: 1.0,
            elite_weight,
            max_iterations: 1000,
            seed: 0,
            start_mode: StartMode::RoundRobin,
            meas: MeasParams::with_reinforcement(elite_weight),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.max_iterations = iterations;
        self
    }

    pub fn with_ants(mut self, ants: usize) -> Self {
        self.ants = ants;
        self
    }

    pub fn validate(&self) -> Result<()> {
        fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidConfig(msg()))
            }
        }
        check(self.alpha.is_finite() && self.alpha >= 0.0, || {
            format!("alpha must be a finite value >= 0, got {}", self.alpha)
        })?;
        check(self.beta.is_finite() && self.beta >= 0.0, || {
            format!("beta must be a finite value >= 0, got {}", self.beta)
        })?;
        check((0.0..=1.0).contains(&self.rho), || {
            format!("rho must lie in [0, 1], got {}", self.rho)
        })?;
        check(self.ants >= 1, || {
            "at least one ant is required".to_string()
        })?;
        check(self.q_deposit.is_finite() && self.q_deposit > 0.0, || {
            format!("deposit constant must be > 0, got {}", self.q_deposit)
        })?;
        check(
            self.elite_weight.is_finite() && self.elite_weight >= 0.0,
            || format!("elite weight must be >= 0, got {}", self.elite_weight),
        )?;
        check(self.max_iterations >= 1, || {
            "the iteration budget must be at least 1".to_string()
        })?;
        self.meas.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_scale_with_n() {
        let c = ColonyConfig::for_instance(10);
        assert_eq!(c.ants, 10);
        assert_eq!(c.elite_weight, 3.0);
        assert_eq!(c.meas.reinforce_weight, 3.0);
        assert_eq!((c.alpha, c.beta, c.rho, c.q_deposit), (1.0, 3.0, 0.1, 1.0));
        let big = ColonyConfig::for_instance(52);
        assert_eq!(big.ants, 50);
        assert_eq!(big.elite_weight, 13.0);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn rejects_out_of_range() {
        let base = ColonyConfig::for_instance(5);
        let bad = [
            ColonyConfig {
                rho: 1.5,
                ..base.clone()
            },
            ColonyConfig {
                rho: -0.1,
                ..base.clone()
            },
            ColonyConfig {
                alpha: -1.0,
                ..base.clone()
            },
            ColonyConfig {
                beta: f64::NAN,
                ..base.clone()
            },
            ColonyConfig {
                ants: 0,
                ..base.clone()
            },
            ColonyConfig {
                q_deposit: 0.0,
                ..base.clone()
            },
            ColonyConfig {
                elite_weight: -1.0,
                ..base.clone()
            },
            ColonyConfig {
                max_iterations: 0,
                ..base.clone()
            },
        ];
        for cfg in bad {
            assert!(
                matches!(cfg.validate(), Err(Error::InvalidConfig(_))),
                "{cfg:?}"
            );
        }
    }
}
