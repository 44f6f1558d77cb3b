// Run the full verification report, then run it again against a
// deliberately broken classifier to see a counterexample.
//
// cargo run --release --example verify_suite -- 30

use partition_evolve::level::Source;
use partition_evolve::method2::expand_m2;
use partition_evolve::{
    classify_m2, predecessor_m2, verify, verify_with, Kind, Method1, Method2, Partition, Result,
    SuccessorRule, TaggedPartition, DEFAULT_ENUMERATION_CAP,
};

pub fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    let report = verify(max_n, DEFAULT_ENUMERATION_CAP).expect("levels fit in memory");
    println!("{report}\n");

    let broken = verify_with(max_n, DEFAULT_ENUMERATION_CAP, &Method1, &DropsOneUnit).unwrap();
    if let Some(fail) = broken.first_failure() {
        println!("broken rule: {fail}");
    }
}

/// Never treats a partition with exactly one unit as Second Kind.
struct DropsOneUnit;

impl SuccessorRule for DropsOneUnit {
    fn source(&self) -> Source {
        Source::Method2
    }

    fn classify(&self, p: &Partition) -> Kind {
        if p.unit_count().get() == 1 {
            Kind::FirstKind
        } else {
            classify_m2(p)
        }
    }

    fn successors(&self, p: &Partition) -> Vec<TaggedPartition> {
        expand_m2(p, self.classify(p))
    }

    fn predecessor(&self, p: &Partition) -> Result<Partition> {
        predecessor_m2(p)
    }

    fn explicit(&self, next_n: usize) -> Option<TaggedPartition> {
        Method2.explicit(next_n)
    }
}
