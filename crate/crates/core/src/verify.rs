//! The full cross-check suite behind `partition-evolve verify`.
//!
//! Every check compares a method against the brute-force oracle or against
//! the generating functions. Only two consecutive oracle levels are alive at
//! any time, so memory stays proportional to `P(max_n)`.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::error::Result;
use crate::evolve::{step, EvolveOptions, SuccessorRule};
use crate::level::{Level, TaggedPartition};
use crate::method1::Method1;
use crate::method2::Method2;
use crate::oracle::{enumerate_oracle, PartitionCounter};
use crate::partition::{classify_m1, Kind, Partition};
use crate::series::{check_recurrence_with, euler_p_coeffs, q_coeffs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    /// Weights covered; `None` when the range is empty.
    pub range: Option<RangeInclusive<usize>>,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    fn from_checks(checks: Vec<CheckResult>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        VerificationReport { checks, overall }
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let range = match &self.range {
            Some(r) => format!("n={}..={}", r.start(), r.end()),
            None => "n=(none)".to_string(),
        };
        write!(f, "{status} {:<24} {range}", self.name)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "  counterexample: {cx}")?;
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

/// Collects the first failure of one named check across many weights.
struct Accumulator {
    name: &'static str,
    range: Option<RangeInclusive<usize>>,
    counterexample: Option<String>,
}

impl Accumulator {
    fn new(name: &'static str, lo: usize, hi: Option<usize>) -> Self {
        Accumulator {
            name,
            range: hi.filter(|&h| h >= lo).map(|h| lo..=h),
            counterexample: None,
        }
    }

    fn covers(&self, n: usize) -> bool {
        self.range.as_ref().is_some_and(|r| r.contains(&n))
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        if self.counterexample.is_none() {
            if let Err(cx) = outcome {
                self.counterexample = Some(cx);
            }
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            range: self.range,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

/// Runs the suite with the two shipped methods.
pub fn verify(max_n: usize, cap: usize) -> Result<VerificationReport> {
    verify_with(max_n, cap, &Method1, &Method2)
}

/// Runs the suite against arbitrary rules standing in for the two methods.
/// Bijection checks run over source weights `0..min(max_n, cap)`; series
/// checks run up to `max_n`.
pub fn verify_with(
    max_n: usize,
    cap: usize,
    first: &dyn SuccessorRule,
    second: &dyn SuccessorRule,
) -> Result<VerificationReport> {
    let enum_max = max_n.min(cap);
    let src_max = enum_max.checked_sub(1);

    let mut m1_bij = Accumulator::new("m1-bijection", 0, src_max);
    let mut m1_rt = Accumulator::new("m1-round-trip", 0, src_max);
    let mut m2_bij = Accumulator::new("m2-bijection", 0, src_max);
    let mut m2_rt = Accumulator::new("m2-round-trip", 0, src_max);
    let mut recurrence = Accumulator::new("recurrence", 0, max_n.checked_sub(1));
    let mut q_semantic = Accumulator::new("q-smallest-part-unique", 0, Some(enum_max));
    let mut equivalence = Accumulator::new("method-equivalence", 0, Some(enum_max));
    let mut mixed = Accumulator::new("mixed-evolution", 0, Some(enum_max));
    let mut oracle_series = Accumulator::new("oracle-count-vs-series", 0, Some(max_n));
    let mut oracle_enum = Accumulator::new("oracle-enum-vs-count", 0, Some(enum_max));

    let p = euler_p_coeffs(max_n);
    let q = q_coeffs(max_n);

    let rec = check_recurrence_with(&p, &q);
    recurrence.record(match rec.violations.first() {
        None => Ok(()),
        Some(v) => Err(format!(
            "n={}: P(n+1)={} but P(n)+Q(n)={}",
            v.n, v.lhs, v.rhs
        )),
    });

    let mut counter = PartitionCounter::new();
    for (n, pn) in p.iter().enumerate() {
        let counted = BigInt::from(counter.count(n));
        if &counted != pn {
            oracle_series.record(Err(format!("n={n}: count_oracle={counted}, series P={pn}")));
            break;
        }
    }

    let opts = EvolveOptions::default();
    let mut current = enumerate_oracle(0, usize::MAX)?;
    let mut via_first = Some(Level::seed());
    let mut via_second = Some(Level::seed());
    let mut via_mixed = Some(Level::seed());

    for n in 0..=enum_max {
        let count = BigInt::from(counter.count(n));
        if BigInt::from(current.len()) != count {
            oracle_enum.record(Err(format!(
                "n={n}: enumerated {} partitions, counted {count}",
                current.len()
            )));
        }

        let second_kind = current
            .partitions()
            .filter(|p| classify_m1(p) == Kind::SecondKind)
            .count();
        let qn = &q[n];
        if &BigInt::from(second_kind) != qn {
            q_semantic.record(Err(format!(
                "n={n}: {second_kind} partitions with a unique smallest part, series Q={qn}"
            )));
        }

        for level in [&via_first, &via_second].into_iter().flatten() {
            equivalence.record(compare_levels(level, &current));
        }
        if let Some(level) = &via_mixed {
            mixed.record(compare_levels(level, &current));
        }

        if n == enum_max {
            break;
        }
        let next = enumerate_oracle(n + 1, usize::MAX)?;

        if m1_bij.covers(n) && !m1_bij.failed() {
            m1_bij.record(check_bijection(first, &current, &next));
        }
        if m1_rt.covers(n) && !m1_rt.failed() {
            m1_rt.record(check_round_trip(first, &current));
        }
        if m2_bij.covers(n) && !m2_bij.failed() {
            m2_bij.record(check_bijection(second, &current, &next));
        }
        if m2_rt.covers(n) && !m2_rt.failed() {
            m2_rt.record(check_round_trip(second, &current));
        }

        via_first = advance(first, via_first, &mut equivalence, opts);
        via_second = advance(second, via_second, &mut equivalence, opts);
        let mixed_rule: &dyn SuccessorRule = if n % 2 == 0 { first } else { second };
        via_mixed = advance(mixed_rule, via_mixed, &mut mixed, opts);

        current = next;
    }

    Ok(VerificationReport::from_checks(vec![
        m1_bij.finish(),
        m1_rt.finish(),
        m2_bij.finish(),
        m2_rt.finish(),
        recurrence.finish(),
        q_semantic.finish(),
        equivalence.finish(),
        mixed.finish(),
        oracle_series.finish(),
        oracle_enum.finish(),
    ]))
}

fn advance(
    rule: &dyn SuccessorRule,
    level: Option<Level>,
    acc: &mut Accumulator,
    opts: EvolveOptions,
) -> Option<Level> {
    let level = level?;
    match step(rule, &level, opts) {
        Ok(next) => Some(next),
        Err(e) => {
            acc.record(Err(format!(
                "{:?} evolving n={}: {e}",
                rule.source(),
                level.n()
            )));
            None
        }
    }
}

fn compare_levels(got: &Level, oracle: &Level) -> std::result::Result<(), String> {
    if got.same_partitions(oracle) {
        return Ok(());
    }
    if let Some(extra) = got.partitions().find(|p| !oracle.contains(p)) {
        return Err(format!(
            "n={}: {} produced {extra}, not a partition of n",
            oracle.n(),
            got.source()
        ));
    }
    let missing = oracle.partitions().find(|p| !got.contains(p));
    Err(format!(
        "n={}: {} is missing {}",
        oracle.n(),
        got.source(),
        missing.map_or_else(|| "?".to_string(), |p| p.to_string())
    ))
}

/// Successor sets of distinct partitions of `n` are disjoint, and together
/// with the rule's explicit addition they cover the partitions of `n + 1`
/// exactly; the explicit addition is never also a successor.
pub fn check_bijection(
    rule: &dyn SuccessorRule,
    level: &Level,
    next: &Level,
) -> std::result::Result<(), String> {
    let n = level.n();
    let mut produced: Vec<(TaggedPartition, &Partition)> = Vec::with_capacity(next.len());
    for src in level.partitions() {
        for s in rule.successors(src) {
            if s.partition.weight() != n + 1 {
                return Err(format!("{src} -> {} has the wrong weight", s.partition));
            }
            produced.push((s, src));
        }
    }
    let explicit = rule.explicit(n + 1);
    if let Some(e) = &explicit {
        if let Some((_, src)) = produced.iter().find(|(s, _)| s.partition == e.partition) {
            return Err(format!(
                "{} is added explicitly but is also a successor of {src}",
                e.partition
            ));
        }
    }
    produced.sort_unstable_by(|a, b| a.0.partition.cmp(&b.0.partition));
    if let Some(w) = produced
        .windows(2)
        .find(|w| w[0].0.partition == w[1].0.partition)
    {
        return Err(format!(
            "{} is a successor of both {} and {}",
            w[0].0.partition, w[0].1, w[1].1
        ));
    }
    let mut all: Vec<&Partition> = produced.iter().map(|(s, _)| &s.partition).collect();
    if let Some(e) = &explicit {
        all.push(&e.partition);
        all.sort_unstable();
    }
    if all.len() == next.len() && all.iter().copied().eq(next.partitions()) {
        return Ok(());
    }
    if let Some(missing) = next.partitions().find(|p| all.binary_search(p).is_err()) {
        return Err(match rule.predecessor(missing) {
            Ok(pred) => {
                format!("{missing} is never generated from weight {n} (expected from {pred})")
            }
            Err(_) => format!("{missing} is never generated from weight {n}"),
        });
    }
    Err(format!(
        "weight {n} generates partitions outside weight {}",
        n + 1
    ))
}

/// `predecessor(s) = p` for every successor `s` of `p`, the successor count
/// matches the kind, and every partition with a predecessor is among that
/// predecessor's successors.
pub fn check_round_trip(
    rule: &dyn SuccessorRule,
    level: &Level,
) -> std::result::Result<(), String> {
    for p in level.partitions() {
        let succ = rule.successors(p);
        let expected = match rule.classify(p) {
            Kind::FirstKind => 1,
            Kind::SecondKind => 2,
        };
        if succ.len() != expected {
            return Err(format!(
                "{p} has {} successors, expected {expected}",
                succ.len()
            ));
        }
        for s in &succ {
            match rule.predecessor(&s.partition) {
                Ok(back) if &back == p => {}
                Ok(back) => {
                    return Err(format!(
                        "{p} -> {} but the predecessor of {} is {back}",
                        s.partition, s.partition
                    ))
                }
                Err(e) => return Err(format!("{p} -> {}: {e}", s.partition)),
            }
        }
        if p.is_empty() || rule.explicit(p.weight()).is_some_and(|e| &e.partition == p) {
            continue;
        }
        match rule.predecessor(p) {
            Ok(pred) => {
                if !rule.successors(&pred).iter().any(|s| &s.partition == p) {
                    return Err(format!("{p} is not a successor of its predecessor {pred}"));
                }
            }
            Err(e) => return Err(format!("{p}: {e}")),
        }
    }
    Ok(())
}
