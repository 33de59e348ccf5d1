use crate::aco::{ColonyConfig, StartMode};
use crate::error::{Error, Result};
use crate::meas::Scope;

/// Optional replacements for individual [`ColonyConfig`] fields.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverrides {
    pub iterations: Option<usize>,
    pub ants: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub rho: Option<f64>,
    pub q_deposit: Option<f64>,
    /// Also becomes w⁺ unless `w_plus` is given.
    pub elite: Option<f64>,
    pub w_plus: Option<f64>,
    pub w_minus: Option<f64>,
    /// `Some(None)` disables escapes.
    pub stagnation_window: Option<Option<usize>>,
    pub tolerance: Option<f64>,
    pub escape_blend: Option<f64>,
    pub random_starts: Option<bool>,
    pub best_scope: Option<Scope>,
    pub worst_scope: Option<Scope>,
}

impl ConfigOverrides {
    pub fn apply(&self, cfg: &mut ColonyConfig) {
        if let Some(v) = self.iterations {
            cfg.max_iterations = v;
        }
        if let Some(v) = self.ants {
            cfg.ants = v;
        }
        if let Some(v) = self.alpha {
            cfg.alpha = v;
        }
        if let Some(v) = self.beta {
            cfg.beta = v;
        }
        if let Some(v) = self.rho {
            cfg.rho = v;
        }
        if let Some(v) = self.q_deposit {
            cfg.q_deposit = v;
        }
        if let Some(v) = self.elite {
            cfg.elite_weight = v;
            cfg.meas.reinforce_weight = v;
        }
        if let Some(v) = self.w_plus {
            cfg.meas.reinforce_weight = v;
        }
        if let Some(v) = self.w_minus {
            cfg.meas.penalty_weight = v;
        }
        if let Some(v) = self.stagnation_window {
            cfg.meas.stagnation_window = v;
        }
        if let Some(v) = self.tolerance {
            cfg.meas.improvement_tolerance = v;
        }
        if let Some(v) = self.escape_blend {
            cfg.meas.escape_blend = v;
        }
        if let Some(v) = self.random_starts {
            cfg.start_mode = if v {
                StartMode::Random
            } else {
                StartMode::RoundRobin
            };
        }
        if let Some(v) = self.best_scope {
            cfg.meas.best_scope = v;
        }
        if let Some(v) = self.worst_scope {
            cfg.meas.worst_scope = v;
        }
    }

    /// Sets one field from its textual key, as used in bench spec files.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("{key}: cannot parse {value:?}")))
        }
        match key {
            "iters" | "iterations" => self.iterations = Some(num(key, value)?),
            "ants" => self.ants = Some(num(key, value)?),
            "alpha" => self.alpha = Some(num(key, value)?),
            "beta" => self.beta = Some(num(key, value)?),
            "rho" => self.rho = Some(num(key, value)?),
            "q" => self.q_deposit = Some(num(key, value)?),
            "elite" => self.elite = Some(num(key, value)?),
            "w_plus" => self.w_plus = Some(num(key, value)?),
            "w_minus" => self.w_minus = Some(num(key, value)?),
            "stag_window" => {
                self.stagnation_window = Some(match value {
                    "inf" | "none" | "off" => None,
                    v => Some(num(key, v)?),
                })
            }
            "tolerance" => self.tolerance = Some(num(key, value)?),
            "escape_blend" => self.escape_blend = Some(num(key, value)?),
            "random_starts" => self.random_starts = Some(num(key, value)?),
            "best_scope" => self.best_scope = Some(parse_scope(value)?),
            "worst_scope" => self.worst_scope = Some(parse_scope(value)?),
            other => {
                return Err(Error::InvalidConfig(format!(
                    "unknown configuration key {other:?}"
                )))
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_scope(value: &str) -> Result<Scope> {
    match value {
        "global" => Ok(Scope::Global),
        "iteration" => Ok(Scope::Iteration),
        other => Err(Error::InvalidConfig(format!(
            "scope must be `global` or `iteration`, got {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elite_carries_into_w_plus_unless_given() {
        let mut cfg = ColonyConfig::for_instance(20);
        ConfigOverrides {
            elite: Some(9.0),
            ..Default::default()
        }
        .apply(&mut cfg);
        assert_eq!((cfg.elite_weight, cfg.meas.reinforce_weight), (9.0, 9.0));

        let mut cfg = ColonyConfig::for_instance(20);
        ConfigOverrides {
            elite: Some(9.0),
            w_plus: Some(2.0),
            ..Default::default()
        }
        .apply(&mut cfg);
        assert_eq!((cfg.elite_weight, cfg.meas.reinforce_weight), (9.0, 2.0));
    }

    #[test]
    fn set_parses_keys() {
        let mut o = ConfigOverrides::default();
        o.set("iters", "25").unwrap();
        o.set("stag_window", "inf").unwrap();
        o.set("best_scope", "global").unwrap();
        o.set("random_starts", "true").unwrap();
        assert_eq!(o.iterations, Some(25));
        assert_eq!(o.stagnation_window, Some(None));
        assert_eq!(o.best_scope, Some(Scope::Global));
        assert_eq!(o.random_starts, Some(true));
        assert!(o.set("rho", "lots").is_err());
        assert!(o.set("gamma", "1").is_err());
        assert!(o.set("best_scope", "local").is_err());
    }
}
