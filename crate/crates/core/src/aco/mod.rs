//! Ant colony machinery: pheromone state, transition rule, tour
//! construction, deposits, evaporation, and the AS/EAS solvers.

pub mod colony;
pub mod config;
pub mod construct;
pub mod pheromone;

pub use colony::{
    run_as, run_eas, run_meas, run_with_policy, Algorithm, AntSystemPolicy, EliteAntSystemPolicy,
    IterationContext, RunResult, UpdateOutcome, UpdatePolicy,
};
pub use config::{ColonyConfig, StartMode};
pub use construct::{
    construct_tour, roulette, select_next, transition_probabilities, AntState, ChoiceInfo,
};
pub use pheromone::{init_pheromone, PheromoneMatrix, UpdateCounters};
