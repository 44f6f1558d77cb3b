//! First method: append a unit to every partition, and additionally augment
//! the last part of every Second Kind partition.

use crate::error::{Error, Result};
use crate::evolve::{evolve, EvolveOptions, SuccessorRule};
use crate::level::{Level, Provenance, Source, TaggedPartition};
use crate::partition::{classify_m1, Kind, Partition};

#[derive(Debug, Clone, Copy, Default)]
pub struct Method1;

impl SuccessorRule for Method1 {
    fn source(&self) -> Source {
        Source::Method1
    }

    fn classify(&self, p: &Partition) -> Kind {
        classify_m1(p)
    }

    fn successors(&self, p: &Partition) -> Vec<TaggedPartition> {
        successors_m1(p)
    }

    fn predecessor(&self, p: &Partition) -> Result<Partition> {
        predecessor_m1(p)
    }
}

pub fn successors_m1(p: &Partition) -> Vec<TaggedPartition> {
    expand_m1(p, classify_m1(p))
}

/// Successors of `p` as if it had been classified `kind`. Exposed so that
/// alternative classifiers can be checked against the same expansion.
pub fn expand_m1(p: &Partition, kind: Kind) -> Vec<TaggedPartition> {
    let added = TaggedPartition::new(p.with_unit_appended(), Provenance::AddedUnit);
    match kind {
        Kind::FirstKind => vec![added],
        Kind::SecondKind => {
            let mut parts = p.parts().to_vec();
            match parts.last_mut() {
                Some(last) => *last += 1,
                None => parts.push(1),
            }
            assert!(
                parts.windows(2).all(|w| w[0] >= w[1]),
                "augmenting the last part of {p} broke canonical order"
            );
            vec![
                added,
                TaggedPartition::new(Partition::from_sorted(parts), Provenance::Augmented),
            ]
        }
    }
}

/// Drops a trailing unit, otherwise decrements the last part.
pub fn predecessor_m1(p: &Partition) -> Result<Partition> {
    let mut parts = p.parts().to_vec();
    match parts.last_mut() {
        None => return Err(Error::EmptyHasNoPredecessor),
        Some(1) => {
            parts.pop();
        }
        Some(last) => *last -= 1,
    }
    Ok(Partition::from_sorted(parts))
}

pub fn evolve_m1(start: &Level, target_n: usize) -> Result<Level> {
    evolve(&Method1, start, target_n, EvolveOptions::default())
}
