//! Command-line surface. The binary only parses arguments and calls [`run`].
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 enumeration cap exceeded.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::bench::{run_bench, write_bench_csv};
use crate::error::{Error, Result};
use crate::evolve::{evolve, evolve_with, EvolveOptions, SuccessorRule};
use crate::level::{Level, Provenance};
use crate::method1::Method1;
use crate::method2::Method2;
use crate::oracle::{count_oracle, enumerate_oracle, DEFAULT_ENUMERATION_CAP};
use crate::partition::{Kind, Partition};
use crate::series::{euler_p_coeffs, q_coeffs, write_coeff_csv};
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "partition-evolve",
    version,
    about = "Generate the partitions of n+1 from the partitions of n"
)]
pub struct Cli {
    /// Largest weight that may be fully enumerated.
    #[arg(long, global = true, env = "PARTITION_EVOLVE_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,

    /// Expand levels on all cores; output is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P(n).
    Count {
        n: usize,
        #[arg(long, value_enum, default_value_t = CountSource::Series)]
        source: CountSource,
        /// Also write the n,P,Q coefficient table up to n.
        #[arg(long)]
        coeffs_csv: Option<PathBuf>,
    },
    /// Print every partition of n in canonical order.
    List {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = ListSource::Oracle)]
        source: ListSource,
    },
    /// Split the partitions of n into First Kind and Second Kind.
    Classify {
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::One)]
        method: MethodArg,
    },
    /// Evolve a level from weight FROM_N to weight TO_N.
    Evolve {
        from_n: usize,
        to_n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::One)]
        method: MethodArg,
        /// JSONL snapshot holding the complete level FROM_N. Without it the
        /// start level is enumerated directly.
        #[arg(long)]
        snapshot_in: Option<PathBuf>,
        /// Write the final level here as JSONL instead of to stdout.
        #[arg(long)]
        snapshot_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the unique predecessor of a partition written as "a+b+c".
    Predecessor {
        partition: String,
        #[arg(long, value_enum, default_value_t = MethodArg::One)]
        method: MethodArg,
    },
    /// Run every cross-check up to MAX_N; exit 1 if any fails.
    Verify {
        max_n: usize,
        /// Also write the n,P,Q coefficient table up to MAX_N.
        #[arg(long)]
        coeffs_csv: Option<PathBuf>,
    },
    /// Time both methods and the oracle for every n up to MAX_N (CSV).
    Bench { max_n: usize, repetitions: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountSource {
    Series,
    Oracle,
    Evolve1,
    Evolve2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListSource {
    Oracle,
    Evolve1,
    Evolve2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl MethodArg {
    fn rule(self) -> &'static dyn SuccessorRule {
        match self {
            MethodArg::One => &Method1,
            MethodArg::Two => &Method2,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Runs one command. Errors are reported on `err` and mapped to exit codes.
pub fn run<O: Write, E: Write>(cli: &Cli, out: &mut O, err: &mut E) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch<O: Write, E: Write>(cli: &Cli, out: &mut O, err: &mut E) -> Result<i32> {
    let opts = EvolveOptions {
        parallel: cli.parallel,
    };
    let cap = cli.cap;
    match &cli.command {
        Command::Count {
            n,
            source,
            coeffs_csv,
        } => {
            if let Some(path) = coeffs_csv {
                write_coeffs(path, *n)?;
            }
            let count: BigUint = match source {
                CountSource::Series => euler_p_coeffs(*n)[*n]
                    .to_biguint()
                    .expect("partition counts are nonnegative"),
                CountSource::Oracle => enumerate_oracle(*n, cap)?.len().into(),
                CountSource::Evolve1 => evolve_from_seed(&Method1, *n, cap, opts)?.len().into(),
                CountSource::Evolve2 => evolve_from_seed(&Method2, *n, cap, opts)?.len().into(),
            };
            writeln!(out, "{count}")?;
        }
        Command::List { n, format, source } => {
            let level = match source {
                ListSource::Oracle => enumerate_oracle(*n, cap)?,
                ListSource::Evolve1 => evolve_from_seed(&Method1, *n, cap, opts)?,
                ListSource::Evolve2 => evolve_from_seed(&Method2, *n, cap, opts)?,
            };
            write_level(&level, *format, out)?;
        }
        Command::Classify { n, method } => {
            let level = enumerate_oracle(*n, cap)?;
            let rule = method.rule();
            let (first, second): (Vec<&Partition>, Vec<&Partition>) = level
                .partitions()
                .partition(|p| rule.classify(p) == Kind::FirstKind);
            writeln!(out, "{}", group_line(1, "First Kind", &first))?;
            writeln!(out, "{}", group_line(2, "Second Kind", &second))?;
        }
        Command::Evolve {
            from_n,
            to_n,
            method,
            snapshot_in,
            snapshot_out,
            format,
        } => {
            if from_n > to_n {
                return Err(Error::TargetBelowStart {
                    start: *from_n,
                    target: *to_n,
                });
            }
            if *to_n > cap {
                return Err(Error::CapExceeded { n: *to_n, cap });
            }
            let start = match snapshot_in {
                Some(path) => load_complete_snapshot(path, *from_n)?,
                None if *from_n == 0 => Level::seed(),
                None => enumerate_oracle(*from_n, cap)?,
            };
            writeln!(err, "{}", level_summary(&start))?;
            let mut summary_err = None;
            let last = evolve_with(method.rule(), &start, *to_n, opts, |level| {
                if let Err(e) = writeln!(err, "{}", level_summary(level)) {
                    summary_err.get_or_insert(e);
                }
            })?;
            if let Some(e) = summary_err {
                return Err(e.into());
            }
            match snapshot_out {
                Some(path) => {
                    let file = File::create(path).map_err(|source| Error::File {
                        path: path.clone(),
                        source,
                    })?;
                    let mut w = BufWriter::new(file);
                    last.write_jsonl(&mut w)?;
                    w.flush()?;
                }
                None => write_level(&last, *format, out)?,
            }
        }
        Command::Predecessor { partition, method } => {
            let p: Partition = partition.parse()?;
            let pred = method.rule().predecessor(&p)?;
            writeln!(out, "{pred}")?;
        }
        Command::Verify { max_n, coeffs_csv } => {
            if let Some(path) = coeffs_csv {
                write_coeffs(path, *max_n)?;
            }
            let report = verify(*max_n, cap)?;
            writeln!(out, "{report}")?;
            if !report.overall {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Bench { max_n, repetitions } => {
            let rows = run_bench(*max_n, *repetitions, cap, opts)?;
            write_bench_csv(&mut *out, &rows)?;
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn evolve_from_seed(
    rule: &dyn SuccessorRule,
    n: usize,
    cap: usize,
    opts: EvolveOptions,
) -> Result<Level> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    evolve(rule, &Level::seed(), n, opts)
}

fn write_level<W: Write>(level: &Level, format: Format, out: &mut W) -> Result<()> {
    match format {
        Format::Text => level.write_text(out),
        Format::Jsonl => level.write_jsonl(out),
    }
}

fn write_coeffs(path: &Path, n: usize) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    write_coeff_csv(BufWriter::new(file), &euler_p_coeffs(n), &q_coeffs(n))
}

/// Reads a snapshot and checks it is the complete level `n`.
fn load_complete_snapshot(path: &Path, n: usize) -> Result<Level> {
    let file = File::open(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    let level = Level::read_jsonl(BufReader::new(file))?;
    if level.n() != n {
        return Err(Error::Snapshot {
            line: 1,
            reason: format!("snapshot holds weight {}, expected {n}", level.n()),
        });
    }
    let expected = count_oracle(n);
    if BigUint::from(level.len()) != expected {
        return Err(Error::IncompleteLevel {
            n,
            found: level.len(),
            expected: expected.to_string(),
        });
    }
    Ok(level)
}

fn group_line(index: usize, label: &str, members: &[&Partition]) -> String {
    let body = members
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("Group {index} ({label}, {}): {{{body}}}", members.len())
}

fn level_summary(level: &Level) -> String {
    let counts = level.tag_counts();
    let mut line = format!("n={} total={}", level.n(), level.len());
    for tag in Provenance::ALL {
        if let Some(c) = counts.get(&tag) {
            line.push_str(&format!(" {tag}={c}"));
        }
    }
    line
}
