//! Ant colony solvers for the symmetric traveling salesman problem.
//!
//! Three solvers share one iteration loop and differ only in their pheromone
//! update: the Ant System ([`Algorithm::As`]), the Elite Ant System
//! ([`Algorithm::Eas`]) and the Modified Elite Ant System
//! ([`Algorithm::Meas`]), which replaces per-ant deposits with a single
//! global update (reinforce the best tour, penalize the worst) and escapes
//! stagnation by smoothing the trails.
//!
//! Exact oracles ([`held_karp_exact`], [`brute_force_optimum`]) and a seeded
//! experiment harness ([`experiment`]) support verification and benchmarking.

pub mod aco;
pub mod error;
pub mod experiment;
pub mod instance;
pub mod meas;
pub mod oracle;
pub mod tour;
pub mod tsplib;

pub use aco::{Algorithm, ColonyConfig, PheromoneMatrix, RunResult, StartMode};
pub use error::{Error, Result};
pub use instance::{Instance, WeightKind};
pub use meas::{MeasParams, Scope};
pub use oracle::{brute_force_optimum, held_karp_exact, nearest_neighbor_tour};
pub use tour::{tour_length, Tour};
pub use tsplib::{parse_tsplib, read_tsplib, to_tsplib};
