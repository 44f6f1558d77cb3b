// Grow the partitions level by level with both methods and show where each
// new partition came from.
//
// cargo run --release --example evolve_levels -- 25

use partition_evolve::{evolve_with, EvolveOptions, Level, Method1, Method2, SuccessorRule};

fn run(name: &str, rule: &dyn SuccessorRule, target: usize) -> Level {
    println!("{name}");
    let opts = EvolveOptions { parallel: true };
    evolve_with(rule, &Level::seed(), target, opts, |level| {
        let tags = level
            .tag_counts()
            .into_iter()
            .map(|(tag, count)| format!("{tag}={count}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("  n={:<3} P={:<8} {tags}", level.n(), level.len());
    })
    .expect("evolution fits in memory")
}

pub fn main() {
    let target = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let first = run("method 1", &Method1, target);
    let second = run("method 2", &Method2, target);
    println!(
        "\nsame {} partitions of {target} from both methods: {}",
        first.len(),
        first.same_partitions(&second)
    );
}
