//! Fixtures shared by the benchmarks.

use antsys_core::{ColonyConfig, Instance};

/// Instance sizes used across benchmark groups.
pub const SIZES: [usize; 3] = [20, 50, 100];

/// Seeded uniform instance, the same for every benchmark run.
pub fn fixture(n: usize) -> Instance {
    Instance::random_uniform(n, 2024).expect("n >= 2")
}

/// Default configuration for `inst` with a fixed iteration budget.
pub fn config(inst: &Instance, iterations: usize) -> ColonyConfig {
    ColonyConfig::for_instance(inst.n()).with_iterations(iterations)
}
