//! Brute-force ground truth: a direct enumerator and a memoized counter.
//! Neither uses the successor methods or the generating functions.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::level::{Level, Provenance, Source, TaggedPartition};
use crate::partition::Partition;

pub const DEFAULT_ENUMERATION_CAP: usize = 60;

/// All partitions of `n`, largest first part first, by the recursion
/// "first part `p`, then a partition of `n - p` with parts `<= p`".
pub fn enumerate_oracle(n: usize, cap: usize) -> Result<Level> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    enumerate_into(n, n, &mut prefix, &mut out);
    Ok(Level::from_sorted_unchecked(n, Source::Oracle, out))
}

fn enumerate_into(
    remaining: usize,
    bound: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<TaggedPartition>,
) {
    if remaining == 0 {
        out.push(TaggedPartition::new(
            Partition::from_sorted(prefix.clone()),
            Provenance::Seed,
        ));
        return;
    }
    for part in (1..=remaining.min(bound)).rev() {
        prefix.push(part);
        enumerate_into(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// Memo table for `c(n, b)`, the number of partitions of `n` with every part
/// at most `b`:
///
/// `c(n, b) = c(n - b, b) + c(n, b - 1)`, `c(0, b) = 1`, `c(n, 0) = 0` for `n > 0`.
#[derive(Debug, Default)]
pub struct PartitionCounter {
    memo: HashMap<(usize, usize), BigUint>,
}

impl PartitionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, n: usize) -> BigUint {
        self.bounded(n, n)
    }

    /// Partitions of `n` with all parts `<= bound`.
    pub fn bounded(&mut self, n: usize, bound: usize) -> BigUint {
        let bound = bound.min(n);
        // Fill bottom-up so deep recursion never happens.
        for m in 1..=n {
            for b in 1..=m.min(bound) {
                if self.memo.contains_key(&(m, b)) {
                    continue;
                }
                let with_b = self.lookup(m - b, b);
                let without_b = self.lookup(m, b - 1);
                self.memo.insert((m, b), with_b + without_b);
            }
        }
        self.lookup(n, bound)
    }

    fn lookup(&self, n: usize, bound: usize) -> BigUint {
        let bound = bound.min(n);
        if n == 0 {
            return BigUint::one();
        }
        if bound == 0 {
            return BigUint::zero();
        }
        self.memo[&(n, bound)].clone()
    }
}

/// `P(n)` with a fresh memo table.
pub fn count_oracle(n: usize) -> BigUint {
    PartitionCounter::new().count(n)
}
