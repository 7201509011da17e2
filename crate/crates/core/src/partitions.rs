//! Compositions of m into n−1 ordered parts, the labels of every basis.

use crate::error::{AdoError, Result};

/// A composition (e₁,…,e_{n−1}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        Partition { parts }
    }

    /// The strand count n (one more than the number of parts).
    pub fn n(&self) -> usize {
        self.parts.len() + 1
    }

    pub fn m(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty composition.
    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn fits_under(&self, cap: u32) -> bool {
        self.parts.iter().all(|&p| p < cap)
    }
}

/// All compositions of `m` into `n − 1` parts, each below `cap` if given, in lexicographic order.
pub fn enumerate(n: usize, m: u32, cap: Option<u32>) -> Vec<Partition> {
    assert!(n >= 1, "need at least one strand");
    let k = n - 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fill(k, m, cap, &mut cur, &mut out);
    out
}

fn fill(k: usize, rest: u32, cap: Option<u32>, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if cur.len() == k {
        if rest == 0 {
            out.push(Partition::new(cur.clone()));
        }
        return;
    }
    let remaining_slots = (k - cur.len() - 1) as u64;
    let top = cap.map_or(rest, |c| rest.min(c.saturating_sub(1)));
    for p in 0..=top {
        let left = rest - p;
        if let Some(c) = cap {
            if left as u64 > remaining_slots * (c.saturating_sub(1)) as u64 {
                continue;
            }
        }
        cur.push(p);
        fill(k, left, cap, cur, out);
        cur.pop();
    }
}

/// Position of `e` in `basis`.
pub fn index_of(e: &Partition, basis: &[Partition]) -> Result<usize> {
    basis.binary_search(e).map_err(|_| AdoError::PartitionNotFound(e.parts.clone()))
}
