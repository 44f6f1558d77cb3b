//! Canonical partitions and the two First/Second Kind classifiers.
//!
//! A [`Partition`] always stores its parts in non-increasing order, every part
//! is at least 1, and the weight (sum of parts) is cached. The empty partition
//! is the unique partition of 0 and renders as `"0"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

/// Two-valued classification of a partition. Which partitions land in which
/// kind depends on the method ([`classify_m1`] or [`classify_m2`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Produces exactly one successor (a separately added unit).
    FirstKind,
    /// Produces exactly two successors.
    SecondKind,
}

/// Number of parts equal to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitCount(pub usize);

impl UnitCount {
    pub fn get(self) -> usize {
        self.0
    }
}

impl Partition {
    /// The unique partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            weight: 0,
        }
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index, value: 0 });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts that must already be non-increasing and
    /// positive; unlike [`Partition::from_parts`] the order is not repaired.
    pub fn from_canonical(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index, value: 0 });
        }
        if !is_non_increasing(&parts) {
            return Err(Error::NotCanonical(render(&parts)));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Caller guarantees `parts` is non-increasing with every part >= 1.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(is_non_increasing(&parts) && parts.last().is_none_or(|&p| p >= 1));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Smallest part, if any.
    pub fn last_part(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    pub fn unit_count(&self) -> UnitCount {
        // Units sit at the tail of a canonical partition.
        UnitCount(self.parts.iter().rev().take_while(|&&p| p == 1).count())
    }

    /// Smallest part strictly greater than 1.
    pub fn smallest_non_unit(&self) -> Option<usize> {
        self.parts.iter().rev().copied().find(|&p| p > 1)
    }

    /// Copy with an extra part 1 appended.
    pub fn with_unit_appended(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.extend_from_slice(&self.parts);
        parts.push(1);
        Partition {
            parts,
            weight: self.weight + 1,
        }
    }

    /// Checks the representation invariants; always true for values built
    /// through the public constructors.
    pub fn is_valid(&self) -> bool {
        is_non_increasing(&self.parts)
            && self.parts.iter().all(|&p| p >= 1)
            && self.parts.iter().sum::<usize>() == self.weight
    }
}

/// Canonicalizes an arbitrary integer sequence into a partition.
pub fn make_partition(raw: &[i64]) -> Result<Partition> {
    let mut parts = Vec::with_capacity(raw.len());
    for (index, &value) in raw.iter().enumerate() {
        if value <= 0 {
            return Err(Error::NonPositivePart { index, value });
        }
        let part = usize::try_from(value).map_err(|_| Error::NonPositivePart { index, value })?;
        parts.push(part);
    }
    Partition::from_parts(parts)
}

pub fn unit_count(p: &Partition) -> UnitCount {
    p.unit_count()
}

/// First-method classifier: Second Kind iff the partition has a single part,
/// or its last part is strictly smaller than the one before it. The empty
/// partition is First Kind.
pub fn classify_m1(p: &Partition) -> Kind {
    match p.parts() {
        [] => Kind::FirstKind,
        [_] => Kind::SecondKind,
        [.., before, last] if last < before => Kind::SecondKind,
        _ => Kind::FirstKind,
    }
}

/// Second-method classifier, driven by the unit count `u` and the smallest
/// non-unit part `m`: Second Kind iff `1 <= u < m`. Partitions with no
/// non-unit part (all units, or empty) are First Kind.
pub fn classify_m2(p: &Partition) -> Kind {
    let units = p.unit_count().get();
    match p.smallest_non_unit() {
        Some(m) if units >= 1 && units < m => Kind::SecondKind,
        _ => Kind::FirstKind,
    }
}

/// Total order used for all output: weight ascending, then parts in
/// descending lexicographic order (`5`, `4+1`, `3+2`, `3+1+1`, ...).
pub fn compare(a: &Partition, b: &Partition) -> Ordering {
    a.weight.cmp(&b.weight).then_with(|| b.parts.cmp(&a.parts))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical text form `a1+a2+...+ak` (non-increasing) or `0`.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let parse_err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        if trimmed == "0" {
            return Ok(Partition::empty());
        }
        if trimmed.is_empty() {
            return Err(parse_err(
                "empty input (the empty partition is written \"0\")".into(),
            ));
        }
        let parts = trimmed
            .split('+')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|e| parse_err(format!("bad part {tok:?}: {e}")))
                    .and_then(|v| {
                        if v == 0 {
                            Err(parse_err("parts must be positive".into()))
                        } else {
                            Ok(v)
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        if !is_non_increasing(&parts) {
            return Err(parse_err(
                "parts must be written in non-increasing order".into(),
            ));
        }
        Ok(Partition::from_sorted(parts))
    }
}

fn is_non_increasing(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

fn render(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::with_capacity(parts.len() * 2);
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        out.push_str(&p.to_string());
    }
    out
}
