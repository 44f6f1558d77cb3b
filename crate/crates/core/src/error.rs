use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("part at position {index} is {value}; every part must be a positive integer")]
    NonPositivePart { index: usize, value: i64 },

    #[error("parts are not in non-increasing order: {0}")]
    NotCanonical(String),

    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("the empty partition has no predecessor")]
    EmptyHasNoPredecessor,

    #[error(
        "the single-part partition {0} has no predecessor under the unit-collecting method; \
         {{n+1}} is not generated and is added separately"
    )]
    ExcludedSingleton(usize),

    #[error("series truncation degrees differ ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("geometric factor index must be at least 1, got {0}")]
    InvalidFactor(usize),

    #[error("weight {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("target weight {target} is below the starting weight {start}")]
    TargetBelowStart { start: usize, target: usize },

    #[error("partition {partition} was generated twice while building weight {n}")]
    Duplicate { n: usize, partition: String },

    #[error("member {partition} of a level of weight {n} has weight {weight}")]
    WrongWeight {
        n: usize,
        weight: usize,
        partition: String,
    },

    #[error("level of weight {n} has {found} partitions, expected {expected}")]
    IncompleteLevel {
        n: usize,
        found: usize,
        expected: String,
    },

    #[error("snapshot line {line}: {reason}")]
    Snapshot { line: usize, reason: String },

    #[error("could not allocate the next level ({requested} partitions)")]
    ResourceExhausted { requested: usize },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
