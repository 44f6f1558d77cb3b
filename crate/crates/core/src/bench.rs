//! Wall-clock scaling of the two evolution methods and the oracle enumerator.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::evolve::{evolve, EvolveOptions};
use crate::level::Level;
use crate::method1::Method1;
use crate::method2::Method2;
use crate::oracle::enumerate_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BenchMethod {
    Method1,
    Method2,
    Oracle,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 3] = [
        BenchMethod::Method1,
        BenchMethod::Method2,
        BenchMethod::Oracle,
    ];
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchMethod::Method1 => "method1",
            BenchMethod::Method2 => "method2",
            BenchMethod::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub method: BenchMethod,
    pub wall_time_ns: u128,
    pub partitions_emitted: usize,
}

/// Produces the full level of every `n` in `0..=max_n` with each method,
/// `repetitions` times. Evolution always starts from the weight-0 seed, so a
/// row measures the cost of reaching `n` from scratch. Rows are ordered by
/// `n`, then method, then repetition.
pub fn run_bench(
    max_n: usize,
    repetitions: usize,
    cap: usize,
    opts: EvolveOptions,
) -> Result<Vec<BenchRow>> {
    if max_n > cap {
        return Err(Error::CapExceeded { n: max_n, cap });
    }
    let seed = Level::seed();
    let mut rows = Vec::with_capacity((max_n + 1) * BenchMethod::ALL.len() * repetitions);
    for n in 0..=max_n {
        for method in BenchMethod::ALL {
            for _ in 0..repetitions {
                let start = Instant::now();
                let level = match method {
                    BenchMethod::Method1 => evolve(&Method1, &seed, n, opts)?,
                    BenchMethod::Method2 => evolve(&Method2, &seed, n, opts)?,
                    BenchMethod::Oracle => enumerate_oracle(n, cap)?,
                };
                let wall_time_ns = start.elapsed().as_nanos();
                rows.push(BenchRow {
                    n,
                    method,
                    wall_time_ns,
                    partitions_emitted: level.len(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn write_bench_csv<W: Write>(out: W, rows: &[BenchRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "method", "wall_time_ns", "partitions_emitted"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.method.to_string(),
            r.wall_time_ns.to_string(),
            r.partitions_emitted.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
