//! Greedy construction and exact solvers for small instances.
//!
//! The two exact solvers share no code path: one enumerates cycles, the
//! other runs the subset dynamic program. Tests use them to check each other.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::tour::Tour;

/// Largest instance [`brute_force_optimum`] accepts.
pub const BRUTE_FORCE_MAX_N: usize = 11;
/// Largest instance [`held_karp_exact`] accepts.
pub const HELD_KARP_MAX_N: usize = 18;

/// Greedy nearest-neighbor tour from `start`; ties go to the lowest index.
pub fn nearest_neighbor_tour(inst: &Instance, start: usize) -> Result<Tour> {
    inst.check_node(start)?;
    let n = inst.n();
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut current = start;
    visited[start] = true;
    order.push(start);
    for _ in 1..n {
        let row = inst.row(current);
        let mut next = usize::MAX;
        let mut best = f64::INFINITY;
        for (j, &d) in row.iter().enumerate() {
            if !visited[j] && (next == usize::MAX || d < best) {
                next = j;
                best = d;
            }
        }
        visited[next] = true;
        order.push(next);
        current = next;
    }
    Ok(Tour::from_trusted(inst, order))
}

/// Exhaustive search over all cycles starting at node 0.
///
/// Each undirected cycle is visited once (second node smaller than the last
/// node) and candidates are generated in lexicographic order, so the
/// lexicographically smallest optimal order is returned.
pub fn brute_force_optimum(inst: &Instance) -> Result<Tour> {
    let n = inst.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge {
            algorithm: "brute force",
            n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    if n <= 3 {
        return Ok(Tour::from_trusted(inst, (0..n).collect()));
    }

    struct Search<'a> {
        inst: &'a Instance,
        path: Vec<usize>,
        used: Vec<bool>,
        best_len: f64,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn descend(&mut self, partial: f64) {
            let n = self.used.len();
            // Ties must survive pruning to keep the lexicographic tie-break.
            if partial > self.best_len {
                return;
            }
            let last = *self.path.last().expect("path starts at 0");
            if self.path.len() == n {
                if self.path[1] > last {
                    return;
                }
                let total = partial + self.inst.d(last, 0);
                if total < self.best_len {
                    self.best_len = total;
                    self.best.clone_from(&self.path);
                }
                return;
            }
            for next in 1..n {
                if self.used[next] {
                    continue;
                }
                self.used[next] = true;
                self.path.push(next);
                self.descend(partial + self.inst.d(last, next));
                self.path.pop();
                self.used[next] = false;
            }
        }
    }

    let mut search = Search {
        inst,
        path: vec![0],
        used: vec![false; n],
        best_len: f64::INFINITY,
        best: Vec::new(),
    };
    search.used[0] = true;
    search.descend(0.0);
    Ok(Tour::from_trusted(inst, search.best))
}

/// Held–Karp dynamic program over subsets of `{1, …, n−1}`, O(2ⁿ·n²) time.
///
/// The returned order starts at 0 and is oriented so that its second node
/// is smaller than its last.
pub fn held_karp_exact(inst: &Instance) -> Result<Tour> {
    let n = inst.n();
    if n > HELD_KARP_MAX_N {
        return Err(Error::TooLarge {
            algorithm: "Held-Karp",
            n,
            limit: HELD_KARP_MAX_N,
        });
    }
    if n <= 3 {
        return Ok(Tour::from_trusted(inst, (0..n).collect()));
    }

    // Node k ∈ 1..n is bit k-1. cost[mask * m + k] is the cheapest path that
    // leaves 0, visits exactly `mask`, and ends at node k+1 (bit k in mask).
    let m = n - 1;
    let full = (1usize << m) - 1;
    let mut cost = vec![f64::INFINITY; (full + 1) * m];
    let mut parent = vec![u8::MAX; (full + 1) * m];
    for k in 0..m {
        cost[(1 << k) * m + k] = inst.d(0, k + 1);
    }
    for mask in 1..=full {
        for k in 0..m {
            if mask & (1 << k) == 0 {
                continue;
            }
            let here = cost[mask * m + k];
            if here == f64::INFINITY {
                continue;
            }
            let mut rest = full & !mask;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let next = mask | (1 << j);
                let cand = here + inst.d(k + 1, j + 1);
                if cand < cost[next * m + j] {
                    cost[next * m + j] = cand;
                    parent[next * m + j] = k as u8;
                }
            }
        }
    }

    let mut end = 0;
    let mut best = f64::INFINITY;
    for k in 0..m {
        let total = cost[full * m + k] + inst.d(k + 1, 0);
        if total < best {
            best = total;
            end = k;
        }
    }

    let mut rev = Vec::with_capacity(n);
    let mut mask = full;
    let mut k = end;
    loop {
        rev.push(k + 1);
        let p = parent[mask * m + k];
        mask &= !(1 << k);
        if p == u8::MAX {
            break;
        }
        k = p as usize;
    }
    rev.push(0);
    rev.reverse();
    if rev[1] > rev[n - 1] {
        rev[1..].reverse();
    }
    Ok(Tour::from_trusted(inst, rev))
}
