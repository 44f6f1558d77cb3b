//! Level-by-level evolution shared by both successor methods.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::level::{check_no_duplicates, Level, Source, TaggedPartition};
use crate::partition::{Kind, Partition};

/// A successor/predecessor scheme that builds the partitions of `n + 1` from
/// those of `n`.
pub trait SuccessorRule: Sync {
    fn source(&self) -> Source;

    fn classify(&self, p: &Partition) -> Kind;

    /// One successor for First Kind partitions, two for Second Kind.
    fn successors(&self, p: &Partition) -> Vec<TaggedPartition>;

    fn predecessor(&self, p: &Partition) -> Result<Partition>;

    /// A partition of `next_n` that no successor produces and must be added
    /// on its own.
    fn explicit(&self, _next_n: usize) -> Option<TaggedPartition> {
        None
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EvolveOptions {
    /// Expand members of a level on the rayon pool. Output is identical to
    /// sequential expansion.
    pub parallel: bool,
}

/// Builds the next level from a complete level.
pub fn step<R: SuccessorRule + ?Sized>(
    rule: &R,
    level: &Level,
    opts: EvolveOptions,
) -> Result<Level> {
    let next_n = level.n() + 1;
    let second_kind = if opts.parallel {
        level
            .members()
            .par_iter()
            .filter(|m| rule.classify(&m.partition) == Kind::SecondKind)
            .count()
    } else {
        level
            .partitions()
            .filter(|p| rule.classify(p) == Kind::SecondKind)
            .count()
    };
    let requested = level.len() + second_kind + 1;
    let mut next: Vec<TaggedPartition> = Vec::new();
    next.try_reserve_exact(requested)
        .map_err(|_| Error::ResourceExhausted { requested })?;

    if opts.parallel {
        next.par_extend(
            level
                .members()
                .par_iter()
                .flat_map_iter(|m| rule.successors(&m.partition)),
        );
    } else {
        for m in level.members() {
            next.extend(rule.successors(&m.partition));
        }
    }
    if let Some(extra) = rule.explicit(next_n) {
        next.push(extra);
    }

    if opts.parallel {
        next.par_sort_unstable_by(|a, b| a.partition.cmp(&b.partition));
    } else {
        next.sort_unstable_by(|a, b| a.partition.cmp(&b.partition));
    }
    check_no_duplicates(next_n, &next)?;
    debug_assert!(next.iter().all(|m| m.partition.weight() == next_n));
    Ok(Level::from_sorted_unchecked(next_n, rule.source(), next))
}

/// Evolves `start` up to weight `target_n`, calling `on_level` with every
/// level produced along the way (not with `start` itself).
pub fn evolve_with<R, F>(
    rule: &R,
    start: &Level,
    target_n: usize,
    opts: EvolveOptions,
    mut on_level: F,
) -> Result<Level>
where
    R: SuccessorRule + ?Sized,
    F: FnMut(&Level),
{
    if target_n < start.n() {
        return Err(Error::TargetBelowStart {
            start: start.n(),
            target: target_n,
        });
    }
    let mut current = start.clone();
    while current.n() < target_n {
        current = step(rule, &current, opts)?;
        on_level(&current);
    }
    Ok(current)
}

pub fn evolve<R: SuccessorRule + ?Sized>(
    rule: &R,
    start: &Level,
    target_n: usize,
    opts: EvolveOptions,
) -> Result<Level> {
    evolve_with(rule, start, target_n, opts, |_| {})
}
