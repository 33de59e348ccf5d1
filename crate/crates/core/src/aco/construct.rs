//! Probabilistic tour construction.

use rand::Rng;

use crate::aco::config::ColonyConfig;
use crate::aco::pheromone::PheromoneMatrix;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::tour::Tour;

/// Stand-in distance for zero-length edges between distinct nodes, so the
/// visibility 1/d stays finite.
pub const ZERO_DISTANCE_CLAMP: f64 = 1e-10;

/// Position and memory of one ant during construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntState {
    visited: Vec<bool>,
    partial_order: Vec<usize>,
}

impl AntState {
    pub fn new(n: usize, start: usize) -> Self {
        assert!(start < n, "start node {start} out of range 0..{n}");
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut partial_order = Vec::with_capacity(n);
        partial_order.push(start);
        AntState {
            visited,
            partial_order,
        }
    }

    pub fn current(&self) -> usize {
        *self
            .partial_order
            .last()
            .expect("ant always has a start node")
    }

    pub fn is_visited(&self, node: usize) -> bool {
        self.visited[node]
    }

    pub fn partial_order(&self) -> &[usize] {
        &self.partial_order
    }

    pub fn is_complete(&self) -> bool {
        self.partial_order.len() == self.visited.len()
    }

    /// Moves the ant to `node`.
    ///
    /// # Panics
    /// If `node` was already visited.
    pub fn visit(&mut self, node: usize) {
        assert!(!self.visited[node], "node {node} already visited");
        self.visited[node] = true;
        self.partial_order.push(node);
    }

    pub fn into_order(self) -> Vec<usize> {
        self.partial_order
    }
}

/// η^β with η = 1/d, using [`ZERO_DISTANCE_CLAMP`] for zero distances.
#[inline]
pub fn visibility_weight(d: f64, beta: f64) -> f64 {
    let d = if d > 0.0 { d } else { ZERO_DISTANCE_CLAMP };
    if beta == 0.0 {
        1.0
    } else {
        (1.0 / d).powf(beta)
    }
}

#[inline]
pub fn trail_weight(tau: f64, alpha: f64) -> f64 {
    if alpha == 1.0 {
        tau
    } else {
        tau.powf(alpha)
    }
}

/// Transition probabilities of `ant` over all nodes:
/// `P[j] = τᵢⱼ^α ηᵢⱼ^β / Σᵤ τᵢᵤ^α ηᵢᵤ^β` for unvisited `j`, 0 otherwise.
pub fn transition_probabilities(
    inst: &Instance,
    ph: &PheromoneMatrix,
    ant: &AntState,
    cfg: &ColonyConfig,
) -> Result<Vec<f64>> {
    let i = ant.current();
    let n = inst.n();
    let mut p = vec![0.0; n];
    let mut total = 0.0;
    for (j, slot) in p.iter_mut().enumerate() {
        if !ant.is_visited(j) {
            let w =
                trail_weight(ph.get(i, j), cfg.alpha) * visibility_weight(inst.d(i, j), cfg.beta);
            *slot = w;
            total += w;
        }
    }
    if !(total > 0.0 && total.is_finite()) {
        return Err(Error::EmptyDistribution);
    }
    for v in &mut p {
        *v /= total;
    }
    Ok(p)
}

/// Roulette-wheel draw: the first index whose cumulative weight exceeds
/// `threshold`. Falls back to the last positive entry when rounding leaves
/// the cumulative sum short of the threshold.
pub fn roulette(weights: &[f64], threshold: f64) -> Result<usize> {
    let mut cumulative = 0.0;
    let mut last_positive = None;
    for (j, &w) in weights.iter().enumerate() {
        if w > 0.0 {
            cumulative += w;
            last_positive = Some(j);
            if cumulative > threshold {
                return Ok(j);
            }
        }
    }
    last_positive.ok_or(Error::EmptyDistribution)
}

/// Samples a node from a normalized probability vector with one uniform draw
/// in `[0, 1)`.
pub fn select_next<R: Rng + ?Sized>(probabilities: &[f64], rng: &mut R) -> Result<usize> {
    let u: f64 = rng.random();
    roulette(probabilities, u)
}

/// Cached `τ^α · η^β` for every edge. Recomputed after each pheromone
/// update so construction costs O(n) per step instead of O(n) `powf` calls.
#[derive(Debug, Clone)]
pub struct ChoiceInfo {
    n: usize,
    visibility: Vec<f64>,
    weights: Vec<f64>,
}

impl ChoiceInfo {
    pub fn new(inst: &Instance, beta: f64) -> Self {
        let n = inst.n();
        let mut visibility = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    visibility[i * n + j] = visibility_weight(inst.d(i, j), beta);
                }
            }
        }
        ChoiceInfo {
            n,
            visibility,
            weights: vec![0.0; n * n],
        }
    }

    pub fn refresh(&mut self, ph: &PheromoneMatrix, alpha: f64) {
        let n = self.n;
        for i in 0..n {
            for (j, &tau) in ph.row(i).iter().enumerate() {
                let k = i * n + j;
                self.weights[k] = if i == j {
                    0.0
                } else {
                    trail_weight(tau, alpha) * self.visibility[k]
                };
            }
        }
    }

    /// Builds one closed tour from `start`, drawing one uniform number per
    /// step.
    pub fn construct<R: Rng + ?Sized>(
        &self,
        inst: &Instance,
        start: usize,
        rng: &mut R,
        scratch: &mut Vec<f64>,
    ) -> Result<Tour> {
        let n = self.n;
        let mut ant = AntState::new(n, start);
        scratch.clear();
        scratch.resize(n, 0.0);
        while !ant.is_complete() {
            let i = ant.current();
            let row = &self.weights[i * n..(i + 1) * n];
            let mut total = 0.0;
            for j in 0..n {
                let w = if ant.is_visited(j) { 0.0 } else { row[j] };
                scratch[j] = w;
                total += w;
            }
            if !(total > 0.0 && total.is_finite()) {
                return Err(Error::EmptyDistribution);
            }
            let u: f64 = rng.random();
            let next = roulette(scratch, u * total)?;
            ant.visit(next);
        }
        Ok(Tour::from_trusted(inst, ant.into_order()))
    }
}

/// Builds one tour from `start` under the current pheromone state.
pub fn construct_tour<R: Rng + ?Sized>(
    inst: &Instance,
    ph: &PheromoneMatrix,
    cfg: &ColonyConfig,
    start: usize,
    rng: &mut R,
) -> Result<Tour> {
    inst.check_node(start)?;
    let mut info = ChoiceInfo::new(inst, cfg.beta);
    info.refresh(ph, cfg.alpha);
    info.construct(inst, start, rng, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn triangle() -> Instance {
        Instance::from_coords("triangle", vec![(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]).unwrap()
    }

    #[test]
    fn roulette_cumulative_rule() {
        assert_eq!(roulette(&[0.5, 0.5], 0.25).unwrap(), 0);
        assert_eq!(roulette(&[0.5, 0.5], 0.75).unwrap(), 1);
        assert_eq!(roulette(&[0.0, 1.0, 0.0], 0.0).unwrap(), 1);
        assert_eq!(roulette(&[0.0, 1.0, 0.0], 0.999_999).unwrap(), 1);
        // Rounding shortfall never selects a zero-weight trailing entry.
        assert_eq!(roulette(&[0.3, 0.7, 0.0], 1.0).unwrap(), 1);
        assert!(matches!(
            roulette(&[0.0, 0.0], 0.1),
            Err(Error::EmptyDistribution)
        ));
    }

    #[test]
    fn forced_selection() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            assert_eq!(select_next(&[0.0, 1.0, 0.0], &mut rng).unwrap(), 1);
        }
    }

    #[test]
    fn empirical_frequencies() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let draws = 100_000;
        let zeros = (0..draws)
            .filter(|_| select_next(&[0.8, 0.2], &mut rng).unwrap() == 0)
            .count();
        let freq = zeros as f64 / draws as f64;
        assert!((freq - 0.8).abs() <= 0.01, "{freq}");
    }

    #[test]
    fn zero_distance_is_clamped() {
        let inst = Instance::from_coords("dup", vec![(0.0, 0.0), (0.0, 0.0), (10.0, 0.0)]).unwrap();
        let cfg = ColonyConfig::for_instance(3);
        let ph = PheromoneMatrix::uniform(3, 1.0, 1e-4);
        let p = transition_probabilities(&inst, &ph, &AntState::new(3, 0), &cfg).unwrap();
        assert!(p.iter().all(|v| v.is_finite()));
        assert!(p[1] > 0.999_999);
    }

    #[test]
    fn ant_state_bookkeeping() {
        let mut ant = AntState::new(4, 2);
        assert_eq!(ant.current(), 2);
        ant.visit(0);
        assert_eq!(ant.current(), 0);
        assert_eq!(ant.partial_order(), &[2, 0]);
        assert!(ant.is_visited(2) && ant.is_visited(0) && !ant.is_visited(1));
        assert!(!ant.is_complete());
    }

    #[test]
    #[should_panic(expected = "already visited")]
    fn revisiting_panics() {
        let mut ant = AntState::new(3, 0);
        ant.visit(0);
    }

    #[test]
    fn constructs_valid_small_tours() {
        let tri = triangle();
        let cfg = ColonyConfig::for_instance(3);
        let ph = PheromoneMatrix::uniform(3, 1.0, 1e-4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for start in 0..3 {
            let t = construct_tour(&tri, &ph, &cfg, start, &mut rng).unwrap();
            assert_eq!(t.length(), 12.0);
            assert_eq!(t.order()[0], start);
        }
        let pair = Instance::from_matrix("p", vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
        let ph2 = PheromoneMatrix::uniform(2, 1.0, 1e-4);
        let t = construct_tour(&pair, &ph2, &cfg, 1, &mut rng).unwrap();
        assert_eq!(t.order(), &[1, 0]);
        assert_eq!(t.length(), 6.0);
        assert!(construct_tour(&pair, &ph2, &cfg, 2, &mut rng).is_err());
    }

    #[test]
    fn construction_is_seed_deterministic() {
        let inst = Instance::random_uniform(8, 4).unwrap();
        let cfg = ColonyConfig::for_instance(8);
        let ph = PheromoneMatrix::uniform(8, 1.0, 1e-4);
        let a = construct_tour(&inst, &ph, &cfg, 0, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = construct_tour(&inst, &ph, &cfg, 0, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
    }
}
