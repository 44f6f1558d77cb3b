//! Complete sets of partitions of a fixed weight, plus the JSON Lines snapshot
//! format used to persist and resume evolution.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Which rule produced a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Provenance {
    /// Starting member, not derived from a smaller level.
    Seed,
    /// A part 1 appended to the predecessor (both methods).
    AddedUnit,
    /// Last part of the predecessor incremented (first method).
    Augmented,
    /// All unit parts of the predecessor collected into one part (second method).
    Collected,
    /// The single-part partition added on its own (second method).
    Explicit,
}

impl Provenance {
    pub const ALL: [Provenance; 5] = [
        Provenance::Seed,
        Provenance::AddedUnit,
        Provenance::Augmented,
        Provenance::Collected,
        Provenance::Explicit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Seed => "Seed",
            Provenance::AddedUnit => "AddedUnit",
            Provenance::Augmented => "Augmented",
            Provenance::Collected => "Collected",
            Provenance::Explicit => "Explicit",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a whole level came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Seed,
    Method1,
    Method2,
    Oracle,
    Snapshot,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Seed => "seed",
            Source::Method1 => "method1",
            Source::Method2 => "method2",
            Source::Oracle => "oracle",
            Source::Snapshot => "snapshot",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedPartition {
    pub partition: Partition,
    pub tag: Provenance,
}

impl TaggedPartition {
    pub fn new(partition: Partition, tag: Provenance) -> Self {
        TaggedPartition { partition, tag }
    }
}

/// All partitions of weight `n`, held in canonical order without duplicates.
#[derive(Debug, Clone)]
pub struct Level {
    n: usize,
    source: Source,
    members: Vec<TaggedPartition>,
}

impl Level {
    /// `{0}`: the single empty partition.
    pub fn seed() -> Self {
        Level {
            n: 0,
            source: Source::Seed,
            members: vec![TaggedPartition::new(Partition::empty(), Provenance::Seed)],
        }
    }

    /// Validates weights, sorts into canonical order and rejects duplicates.
    pub fn from_members(
        n: usize,
        source: Source,
        mut members: Vec<TaggedPartition>,
    ) -> Result<Self> {
        if let Some(bad) = members.iter().find(|m| m.partition.weight() != n) {
            return Err(Error::WrongWeight {
                n,
                weight: bad.partition.weight(),
                partition: bad.partition.to_string(),
            });
        }
        members.sort_unstable_by(|a, b| a.partition.cmp(&b.partition));
        check_no_duplicates(n, &members)?;
        Ok(Level { n, source, members })
    }

    /// Members already sorted and duplicate-free, of weight `n`.
    pub(crate) fn from_sorted_unchecked(
        n: usize,
        source: Source,
        members: Vec<TaggedPartition>,
    ) -> Self {
        Level { n, source, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[TaggedPartition] {
        &self.members
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.members.iter().map(|m| &m.partition)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members
            .binary_search_by(|m| m.partition.cmp(p))
            .is_ok()
    }

    /// Set equality on the partitions, ignoring provenance and source.
    pub fn same_partitions(&self, other: &Level) -> bool {
        self.n == other.n
            && self.members.len() == other.members.len()
            && self.partitions().eq(other.partitions())
    }

    /// Member count per provenance tag; tags with no members are omitted.
    pub fn tag_counts(&self) -> BTreeMap<Provenance, usize> {
        let mut counts = BTreeMap::new();
        for m in &self.members {
            *counts.entry(m.tag).or_insert(0) += 1;
        }
        counts
    }

    /// One canonical text line per partition.
    pub fn write_text<W: Write>(&self, out: &mut W) -> Result<()> {
        for m in &self.members {
            writeln!(out, "{}", m.partition)?;
        }
        Ok(())
    }

    pub fn write_jsonl<W: Write>(&self, out: &mut W) -> Result<()> {
        for m in &self.members {
            let record = SnapshotRecordRef {
                n: self.n,
                parts: m.partition.parts(),
                tag: m.tag,
            };
            serde_json::to_writer(&mut *out, &record).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Reads a snapshot written by [`Level::write_jsonl`]. Every error names
    /// the 1-based line it was found on. Completeness is not checked here.
    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Level> {
        let mut n: Option<usize> = None;
        let mut seen = HashSet::new();
        let mut members = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let snap_err = |reason: String| Error::Snapshot {
                line: line_no,
                reason,
            };
            let record: SnapshotRecord =
                serde_json::from_str(&line).map_err(|e| snap_err(e.to_string()))?;
            let expected_n = *n.get_or_insert(record.n);
            if record.n != expected_n {
                return Err(snap_err(format!(
                    "weight field {} differs from the level weight {expected_n}",
                    record.n
                )));
            }
            let partition =
                Partition::from_canonical(record.parts).map_err(|e| snap_err(e.to_string()))?;
            if partition.weight() != expected_n {
                return Err(snap_err(format!(
                    "parts {partition} sum to {}, not {expected_n}",
                    partition.weight()
                )));
            }
            if !seen.insert(partition.clone()) {
                return Err(snap_err(format!("duplicate partition {partition}")));
            }
            members.push(TaggedPartition::new(partition, record.tag));
        }
        let n = n.ok_or_else(|| Error::Snapshot {
            line: 0,
            reason: "snapshot contains no partitions".into(),
        })?;
        members.sort_unstable_by(|a, b| a.partition.cmp(&b.partition));
        Ok(Level::from_sorted_unchecked(n, Source::Snapshot, members))
    }
}

pub(crate) fn check_no_duplicates(n: usize, sorted: &[TaggedPartition]) -> Result<()> {
    if let Some(w) = sorted.windows(2).find(|w| w[0].partition == w[1].partition) {
        return Err(Error::Duplicate {
            n,
            partition: w[0].partition.to_string(),
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct SnapshotRecordRef<'a> {
    n: usize,
    parts: &'a [usize],
    tag: Provenance,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SnapshotRecord {
    n: usize,
    parts: Vec<usize>,
    tag: Provenance,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(parts: &[usize], tag: Provenance) -> TaggedPartition {
        TaggedPartition::new(Partition::from_canonical(parts.to_vec()).unwrap(), tag)
    }

    #[test]
    fn from_members_sorts_and_rejects_duplicates() {
        let level = Level::from_members(
            3,
            Source::Oracle,
            vec![
                tp(&[1, 1, 1], Provenance::Seed),
                tp(&[3], Provenance::Seed),
                tp(&[2, 1], Provenance::Seed),
            ],
        )
        .unwrap();
        let rendered: Vec<String> = level.partitions().map(|p| p.to_string()).collect();
        assert_eq!(rendered, ["3", "2+1", "1+1+1"]);

        let dup = Level::from_members(
            2,
            Source::Oracle,
            vec![tp(&[2], Provenance::Seed), tp(&[2], Provenance::AddedUnit)],
        );
        assert!(matches!(dup, Err(Error::Duplicate { n: 2, .. })));

        let wrong = Level::from_members(2, Source::Oracle, vec![tp(&[3], Provenance::Seed)]);
        assert!(matches!(wrong, Err(Error::WrongWeight { .. })));
    }

    #[test]
    fn jsonl_format_is_exact() {
        let level = Level::from_members(
            2,
            Source::Method1,
            vec![
                tp(&[2], Provenance::Augmented),
                tp(&[1, 1], Provenance::AddedUnit),
            ],
        )
        .unwrap();
        let mut buf = Vec::new();
        level.write_jsonl(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"n\":2,\"parts\":[2],\"tag\":\"Augmented\"}\n\
             {\"n\":2,\"parts\":[1,1],\"tag\":\"AddedUnit\"}\n"
        );
        let seed = {
            let mut buf = Vec::new();
            Level::seed().write_jsonl(&mut buf).unwrap();
            String::from_utf8(buf).unwrap()
        };
        assert_eq!(seed, "{\"n\":0,\"parts\":[],\"tag\":\"Seed\"}\n");
    }

    #[test]
    fn snapshot_errors_name_the_line() {
        let cases = [
            "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1,2],\"tag\":\"Seed\"}\n",
            "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1],\"tag\":\"Seed\"}\n",
            "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n",
            "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":3,\"parts\":[3],\"tag\":\"Seed\"}\n",
            "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1,1],\"tag\":\"Bogus\"}\n",
        ];
        for case in cases {
            match Level::read_jsonl(case.as_bytes()) {
                Err(Error::Snapshot { line: 2, .. }) => {}
                other => panic!("{case:?}: unexpected {other:?}"),
            }
        }
        assert!(matches!(
            Level::read_jsonl("".as_bytes()),
            Err(Error::Snapshot { .. })
        ));
    }
}
