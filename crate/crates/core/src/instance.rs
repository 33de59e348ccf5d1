//! Immutable symmetric TSP instances.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Side length of the square used by [`Instance::random_uniform`].
pub const RANDOM_SQUARE_SIDE: f64 = 1000.0;

/// How the edge weights of an instance were defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Nearest-integer Euclidean distance between 2D coordinates.
    Euc2d,
    /// Weights given explicitly as a full n×n matrix.
    ExplicitFullMatrix,
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::Euc2d => f.write_str("EUC_2D"),
            WeightKind::ExplicitFullMatrix => f.write_str("EXPLICIT_FULL_MATRIX"),
        }
    }
}

/// TSPLIB `nint` of the Euclidean distance between two points.
pub fn euc_2d(a: (f64, f64), b: (f64, f64)) -> f64 {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    ((dx * dx + dy * dy).sqrt() + 0.5).floor()
}

/// A symmetric TSP instance with a dense distance matrix.
///
/// Instances are immutable once built and can be shared freely between
/// concurrent runs.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    name: String,
    n: usize,
    coords: Option<Vec<(f64, f64)>>,
    dist: Vec<f64>,
    weight_kind: WeightKind,
}

impl Instance {
    /// Builds an EUC_2D instance from node coordinates.
    pub fn from_coords(name: impl Into<String>, coords: Vec<(f64, f64)>) -> Result<Self> {
        let n = coords.len();
        if n < 2 {
            return Err(Error::InvalidInstance(format!(
                "need at least 2 nodes, got {n}"
            )));
        }
        if let Some(i) = coords
            .iter()
            .position(|c| !c.0.is_finite() || !c.1.is_finite())
        {
            return Err(Error::InvalidInstance(format!(
                "coordinate of node {i} is not finite"
            )));
        }
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = euc_2d(coords[i], coords[j]);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        Ok(Instance {
            name: name.into(),
            n,
            coords: Some(coords),
            dist,
            weight_kind: WeightKind::Euc2d,
        })
    }

    /// Builds an instance from an explicit full matrix, given row by row.
    ///
    /// The matrix must be square, symmetric, nonnegative and have a zero
    /// diagonal.
    pub fn from_matrix(name: impl Into<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::InvalidInstance(format!(
                "need at least 2 nodes, got {n}"
            )));
        }
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            dist.extend_from_slice(row);
        }
        for i in 0..n {
            if dist[i * n + i] != 0.0 {
                return Err(Error::InvalidInstance(format!(
                    "diagonal entry ({i},{i}) is {}, expected 0",
                    dist[i * n + i]
                )));
            }
            for j in (i + 1)..n {
                let (a, b) = (dist[i * n + j], dist[j * n + i]);
                if !(a.is_finite() && a >= 0.0) {
                    return Err(Error::InvalidInstance(format!(
                        "weight ({i},{j}) = {a} is not a finite nonnegative number"
                    )));
                }
                if a != b {
                    return Err(Error::InvalidInstance(format!(
                        "matrix is not symmetric at ({i},{j}): {a} vs {b}"
                    )));
                }
            }
        }
        Ok(Instance {
            name: name.into(),
            n,
            coords: None,
            dist,
            weight_kind: WeightKind::ExplicitFullMatrix,
        })
    }

    /// `n` points drawn uniformly from `[0, 1000]²` with a ChaCha8 stream
    /// seeded by `seed`. The same `(n, seed)` always yields the same instance.
    pub fn random_uniform(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coords = (0..n)
            .map(|_| {
                (
                    rng.random::<f64>() * RANDOM_SQUARE_SIDE,
                    rng.random::<f64>() * RANDOM_SQUARE_SIDE,
                )
            })
            .collect();
        Instance::from_coords(format!("rand{n}_s{seed}"), coords)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> Option<&[(f64, f64)]> {
        self.coords.as_deref()
    }

    pub fn weight_kind(&self) -> WeightKind {
        self.weight_kind
    }

    /// Checked lookup of `dist[i][j]`.
    pub fn distance(&self, i: usize, j: usize) -> Result<f64> {
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(self.dist[i * self.n + j])
    }

    /// Unchecked-by-contract lookup used in hot loops. Panics on out-of-range
    /// indices like slice indexing does.
    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    /// Row `i` of the distance matrix.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    /// Number of unordered pairs of distinct nodes at distance zero.
    pub fn zero_length_edges(&self) -> usize {
        let n = self.n;
        (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.dist[i * n + j] == 0.0)
            .count()
    }

    pub(crate) fn check_node(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        }
    }
}
