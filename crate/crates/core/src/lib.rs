//! Generate every partition of `n + 1` from the partitions of `n`.
//!
//! Two successor schemes are provided:
//!
//! - [`method1`]: append a part 1 to every partition of `n`, and for
//!   partitions whose smallest part occurs once also increment that last part.
//! - [`method2`]: append a part 1 to every partition, and for partitions with
//!   `1 <= u < m` units (`m` the smallest non-unit part) also replace the `u`
//!   units by a single part `u + 1`; the single-part partition `[n + 1]` is
//!   added on its own.
//!
//! Both are bijections onto the next level, which the [`verify`] suite checks
//! against a brute-force [`oracle`] and against the generating functions in
//! [`series`].
//!
//! ```
//! use partition_evolve::{evolve_m1, Level};
//!
//! let six = evolve_m1(&Level::seed(), 6).unwrap();
//! assert_eq!(six.len(), 11);
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod evolve;
pub mod level;
pub mod method1;
pub mod method2;
pub mod oracle;
pub mod partition;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use evolve::{evolve, evolve_with, step, EvolveOptions, SuccessorRule};
pub use level::{Level, Provenance, Source, TaggedPartition};
pub use method1::{evolve_m1, predecessor_m1, successors_m1, Method1};
pub use method2::{evolve_m2, predecessor_m2, successors_m2, Method2};
pub use oracle::{count_oracle, enumerate_oracle, PartitionCounter, DEFAULT_ENUMERATION_CAP};
pub use partition::{
    classify_m1, classify_m2, compare, make_partition, unit_count, Kind, Partition, UnitCount,
};
pub use series::{
    check_recurrence, euler_p_coeffs, geometric_factor, q_coeffs, series_mul, Series,
};
pub use verify::{verify, verify_with, CheckResult, VerificationReport};
