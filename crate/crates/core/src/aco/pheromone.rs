use crate::aco::config::ColonyConfig;
use crate::error::Result;
use crate::instance::Instance;
use crate::oracle::nearest_neighbor_tour;
use crate::tour::Tour;

/// Ratio between the pheromone floor and the initial trail level.
pub const FLOOR_RATIO: f64 = 1e-4;

/// Tally of the pheromone updates applied to a matrix.
///
/// Each field counts update *sets*: one call that touches the edges of one
/// tour (or the whole matrix) counts once.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct UpdateCounters {
    pub evaporations: u64,
    /// Tours deposited through the per-ant Ant System rule.
    pub per_ant_deposits: u64,
    pub elite_deposits: u64,
    pub reinforcements: u64,
    pub penalties: u64,
    pub escapes: u64,
}

/// Symmetric trail matrix with a positive floor.
///
/// The diagonal is kept at zero and never read.
#[derive(Debug, Clone, PartialEq)]
pub struct PheromoneMatrix {
    n: usize,
    tau: Vec<f64>,
    tau_min: f64,
    tau_init: f64,
    counters: UpdateCounters,
}

/// τ₀ = m / L_nn with L_nn the nearest-neighbor tour length from node 0, and a
/// floor of τ₀ · 10⁻⁴.
pub fn init_pheromone(inst: &Instance, cfg: &ColonyConfig) -> Result<PheromoneMatrix> {
    let l_nn = nearest_neighbor_tour(inst, 0)?.length();
    // All-zero instances have no meaningful scale; fall back to unit trails.
    let tau0 = if l_nn > 0.0 {
        cfg.ants as f64 / l_nn
    } else {
        1.0
    };
    Ok(PheromoneMatrix::uniform(inst.n(), tau0, tau0 * FLOOR_RATIO))
}

impl PheromoneMatrix {
    /// All off-diagonal entries set to `tau_init`.
    ///
    /// # Panics
    /// If `tau_min` is not positive or exceeds `tau_init`.
    pub fn uniform(n: usize, tau_init: f64, tau_min: f64) -> Self {
        assert!(
            tau_min > 0.0 && tau_min <= tau_init,
            "need 0 < tau_min <= tau_init, got {tau_min} and {tau_init}"
        );
        let mut tau = vec![tau_init; n * n];
        for i in 0..n {
            tau[i * n + i] = 0.0;
        }
        PheromoneMatrix {
            n,
            tau,
            tau_min,
            tau_init,
            counters: UpdateCounters::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau_min(&self) -> f64 {
        self.tau_min
    }

    pub fn tau_init(&self) -> f64 {
        self.tau_init
    }

    pub fn counters(&self) -> UpdateCounters {
        self.counters
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.tau[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`, clamped to the floor.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert_ne!(i, j, "diagonal entries are not trails");
        let v = value.max(self.tau_min);
        self.tau[i * self.n + j] = v;
        self.tau[j * self.n + i] = v;
    }

    /// Row `i`, diagonal included.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.tau[i * self.n..(i + 1) * self.n]
    }

    /// Off-diagonal entries in row-major order.
    pub fn off_diagonal(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.n;
        self.tau
            .iter()
            .enumerate()
            .filter(move |(k, _)| k / n != k % n)
            .map(|(_, &v)| v)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| ((i + 1)..n).all(|j| self.tau[i * n + j] == self.tau[j * n + i]))
    }

    /// τ ← max((1 − ρ)·τ, τ_min) on every off-diagonal entry.
    pub fn evaporate(&mut self, rho: f64) {
        debug_assert!((0.0..=1.0).contains(&rho));
        let keep = 1.0 - rho;
        let floor = self.tau_min;
        self.map_off_diagonal(|t| (keep * t).max(floor));
        self.counters.evaporations += 1;
    }

    /// Ant System deposit: every edge of every tour gains `q / length`.
    pub fn deposit_as(&mut self, tours: &[Tour], q: f64) {
        for tour in tours {
            self.add_along(tour, q / tour.length());
            self.counters.per_ant_deposits += 1;
        }
    }

    /// Elitist deposit: every edge of `best` gains `e · q / length`.
    pub fn deposit_elite(&mut self, best: &Tour, e: f64, q: f64) {
        self.add_along(best, e * q / best.length());
        self.counters.elite_deposits += 1;
    }

    pub(crate) fn add_along(&mut self, tour: &Tour, amount: f64) {
        assert_eq!(tour.len(), self.n, "tour dimension mismatch");
        let n = self.n;
        for (a, b) in tour.edges() {
            let v = self.tau[a * n + b] + amount;
            self.tau[a * n + b] = v;
            self.tau[b * n + a] = v;
        }
    }

    /// Multiplies every edge of `tour` by `factor` once. Edges that occur
    /// twice in the cycle (only when n = 2) are still scaled once.
    pub(crate) fn scale_along(&mut self, tour: &Tour, factor: f64) {
        assert_eq!(tour.len(), self.n, "tour dimension mismatch");
        let n = self.n;
        if n == 2 {
            let v = self.tau[1] * factor;
            self.tau[1] = v;
            self.tau[2] = v;
            return;
        }
        for (a, b) in tour.edges() {
            let v = self.tau[a * n + b] * factor;
            self.tau[a * n + b] = v;
            self.tau[b * n + a] = v;
        }
    }

    pub(crate) fn clamp_to_floor(&mut self) {
        let floor = self.tau_min;
        self.map_off_diagonal(|t| t.max(floor));
    }

    pub(crate) fn map_off_diagonal(&mut self, mut f: impl FnMut(f64) -> f64) {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let k = i * n + j;
                    self.tau[k] = f(self.tau[k]);
                }
            }
        }
    }

    pub(crate) fn counters_mut(&mut self) -> &mut UpdateCounters {
        &mut self.counters
    }
}
