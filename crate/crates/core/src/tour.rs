use crate::error::{Error, Result};
use crate::instance::Instance;

/// A Hamiltonian cycle given as a node order, with its cached length.
#[derive(Debug, Clone, PartialEq)]
pub struct Tour {
    order: Vec<usize>,
    length: f64,
}

impl Tour {
    /// Validates `order` against `inst` and computes its length.
    pub fn new(inst: &Instance, order: Vec<usize>) -> Result<Self> {
        let length = tour_length(inst, &order)?;
        Ok(Tour { order, length })
    }

    /// Builds a tour the caller already knows to be a permutation.
    pub(crate) fn from_trusted(inst: &Instance, order: Vec<usize>) -> Self {
        debug_assert!(validate_permutation(inst.n(), &order).is_ok());
        let length = cycle_length(inst, &order);
        Tour { order, length }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Cycle edges `(order[t], order[t+1])`, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order.len();
        (0..n).map(move |t| (self.order[t], self.order[(t + 1) % n]))
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }
}

/// Checks that `order` is a permutation of `0..n`.
pub fn validate_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::NotPermutation(format!(
            "expected {n} nodes, got {}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(Error::NotPermutation(format!(
                "node {v} out of range 0..{n}"
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotPermutation(format!("node {v} visited twice")));
        }
    }
    Ok(())
}

/// Length of the closed cycle through `order`. Rejects anything that is not a
/// permutation of the instance's nodes.
pub fn tour_length(inst: &Instance, order: &[usize]) -> Result<f64> {
    validate_permutation(inst.n(), order)?;
    Ok(cycle_length(inst, order))
}

fn cycle_length(inst: &Instance, order: &[usize]) -> f64 {
    let n = order.len();
    let open: f64 = order.windows(2).map(|w| inst.d(w[0], w[1])).sum();
    open + inst.d(order[n - 1], order[0])
}
