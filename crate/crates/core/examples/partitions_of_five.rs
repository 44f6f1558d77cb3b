// The partitions of 5, split into the two kinds under each method, and the
// partitions of 6 each group produces.
//
// cargo run --example partitions_of_five

use partition_evolve::{
    classify_m1, classify_m2, enumerate_oracle, successors_m1, successors_m2, Kind, Partition,
    TaggedPartition, DEFAULT_ENUMERATION_CAP,
};

fn show(parts: &[&Partition]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn show_successors(parts: &[&Partition], succ: fn(&Partition) -> Vec<TaggedPartition>) -> String {
    parts
        .iter()
        .flat_map(|p| succ(p))
        .map(|t| t.partition.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn main() {
    let five = enumerate_oracle(5, DEFAULT_ENUMERATION_CAP).expect("5 is under the cap");
    println!(
        "partitions of 5: {}",
        show(&five.partitions().collect::<Vec<_>>())
    );

    for (label, classify, succ) in [
        (
            "method 1",
            classify_m1 as fn(&Partition) -> Kind,
            successors_m1 as fn(&Partition) -> _,
        ),
        ("method 2", classify_m2, successors_m2),
    ] {
        let (first, second): (Vec<&Partition>, Vec<&Partition>) = five
            .partitions()
            .partition(|p| classify(p) == Kind::FirstKind);
        println!("\n{label}");
        println!("  group 1 (First Kind):  {{{}}}", show(&first));
        println!("  group 2 (Second Kind): {{{}}}", show(&second));
        println!("  from group 1: {{{}}}", show_successors(&first, succ));
        println!("  from group 2: {{{}}}", show_successors(&second, succ));
    }
    println!("  added separately: {{6}}");
}
