// The brute-force enumerator and the memoized counter against both methods
// and the Euler series.
//
// cargo run --release --example oracle_cross_check

use num_bigint::BigInt;
use partition_evolve::{
    enumerate_oracle, euler_p_coeffs, evolve_m1, evolve_m2, Level, PartitionCounter,
};

pub fn main() {
    let max = 30;
    let series = euler_p_coeffs(max);
    let mut counter = PartitionCounter::new();
    let (mut m1, mut m2) = (Level::seed(), Level::seed());
    println!(
        "{:>3} {:>8} {:>8} {:>8} {:>8}",
        "n", "oracle", "count", "series", "methods"
    );
    for n in 0..=max {
        m1 = evolve_m1(&m1, n).unwrap();
        m2 = evolve_m2(&m2, n).unwrap();
        let oracle = enumerate_oracle(n, max).unwrap();
        let count = counter.count(n);
        let agree = m1.same_partitions(&oracle) && m2.same_partitions(&oracle);
        assert_eq!(BigInt::from(count.clone()), series[n]);
        println!(
            "{n:>3} {:>8} {count:>8} {:>8} {:>8}",
            oracle.len(),
            series[n],
            if agree { "agree" } else { "DIFFER" }
        );
    }
    println!("count_oracle(300) = {}", counter.count(300));
}
