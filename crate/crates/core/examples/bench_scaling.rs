// Wall-clock cost of reaching each level with both methods and the oracle.
//
// cargo run --release --example bench_scaling -- 40 3

use partition_evolve::bench::{run_bench, BenchMethod};
use partition_evolve::{EvolveOptions, DEFAULT_ENUMERATION_CAP};

pub fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let max_n = args.next().and_then(Result::ok).unwrap_or(20);
    let reps = args.next().and_then(Result::ok).unwrap_or(3).max(1);
    let rows = run_bench(
        max_n,
        reps,
        DEFAULT_ENUMERATION_CAP,
        EvolveOptions::default(),
    )
    .unwrap();

    println!(
        "{:>3} {:>9} {:>12} {:>12} {:>12}",
        "n", "P(n)", "method1 us", "method2 us", "oracle us"
    );
    for n in (0..=max_n).step_by(5.max(max_n / 10)) {
        let best = |m: BenchMethod| {
            rows.iter()
                .filter(|r| r.n == n && r.method == m)
                .map(|r| r.wall_time_ns)
                .min()
                .unwrap_or_default() as f64
                / 1e3
        };
        let count = rows
            .iter()
            .find(|r| r.n == n)
            .map_or(0, |r| r.partitions_emitted);
        println!(
            "{n:>3} {count:>9} {:>12.1} {:>12.1} {:>12.1}",
            best(BenchMethod::Method1),
            best(BenchMethod::Method2),
            best(BenchMethod::Oracle)
        );
    }
}
