//! Second method: append a unit to every partition; for Second Kind partitions
//! also collect the `u` unit parts into a single part `u + 1`. The single-part
//! partition of `n + 1` is never a successor and is added explicitly.

use crate::error::{Error, Result};
use crate::evolve::{evolve, EvolveOptions, SuccessorRule};
use crate::level::{Level, Provenance, Source, TaggedPartition};
use crate::partition::{classify_m2, Kind, Partition};

#[derive(Debug, Clone, Copy, Default)]
pub struct Method2;

impl SuccessorRule for Method2 {
    fn source(&self) -> Source {
        Source::Method2
    }

    fn classify(&self, p: &Partition) -> Kind {
        classify_m2(p)
    }

    fn successors(&self, p: &Partition) -> Vec<TaggedPartition> {
        successors_m2(p)
    }

    fn predecessor(&self, p: &Partition) -> Result<Partition> {
        predecessor_m2(p)
    }

    /// `[next_n]`, except at weight 1 where `[1]` already comes from the
    /// empty partition.
    fn explicit(&self, next_n: usize) -> Option<TaggedPartition> {
        (next_n >= 2)
            .then(|| TaggedPartition::new(explicit_single_part(next_n), Provenance::Explicit))
    }
}

fn explicit_single_part(n: usize) -> Partition {
    Partition::from_sorted(vec![n])
}

pub fn successors_m2(p: &Partition) -> Vec<TaggedPartition> {
    expand_m2(p, classify_m2(p))
}

/// Successors of `p` as if it had been classified `kind`.
///
/// # Panics
///
/// If `kind` is Second Kind but the collected part `u + 1` would exceed the
/// smallest non-unit part (only reachable with a wrong classifier).
pub fn expand_m2(p: &Partition, kind: Kind) -> Vec<TaggedPartition> {
    let added = TaggedPartition::new(p.with_unit_appended(), Provenance::AddedUnit);
    match kind {
        Kind::FirstKind => vec![added],
        Kind::SecondKind => {
            let units = p.unit_count().get();
            let mut parts = p.parts()[..p.len() - units].to_vec();
            let collected = units + 1;
            assert!(
                parts.last().is_none_or(|&m| collected <= m),
                "collecting {units} units of {p} gives a part larger than the smallest non-unit part"
            );
            parts.push(collected);
            vec![
                added,
                TaggedPartition::new(Partition::from_sorted(parts), Provenance::Collected),
            ]
        }
    }
}

/// Drops a trailing unit, otherwise splits the last part `a` into `a - 1`
/// units. Single-part partitions `[m]` with `m >= 2` have no predecessor.
pub fn predecessor_m2(p: &Partition) -> Result<Partition> {
    match p.parts() {
        [] => Err(Error::EmptyHasNoPredecessor),
        [.., 1] => {
            let parts = p.parts()[..p.len() - 1].to_vec();
            Ok(Partition::from_sorted(parts))
        }
        [m] => Err(Error::ExcludedSingleton(*m)),
        [head @ .., last] => {
            let mut parts = Vec::with_capacity(head.len() + last - 1);
            parts.extend_from_slice(head);
            parts.resize(head.len() + last - 1, 1);
            Ok(Partition::from_sorted(parts))
        }
    }
}

pub fn evolve_m2(start: &Level, target_n: usize) -> Result<Level> {
    evolve(&Method2, start, target_n, EvolveOptions::default())
}
