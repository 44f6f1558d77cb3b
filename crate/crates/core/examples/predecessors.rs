// Walk a partition back to 0 with each method's predecessor map.
//
// cargo run --example predecessors -- 4+4+2+1

use partition_evolve::{predecessor_m1, predecessor_m2, Partition, Result};

fn chain(start: &Partition, pred: fn(&Partition) -> Result<Partition>) -> Vec<String> {
    let mut out = vec![start.to_string()];
    let mut current = start.clone();
    while !current.is_empty() {
        match pred(&current) {
            Ok(p) => {
                out.push(p.to_string());
                current = p;
            }
            Err(e) => {
                out.push(format!("<stop: {e}>"));
                break;
            }
        }
    }
    out
}

pub fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4+4+2+1".to_string());
    let start: Partition = text.parse().expect("partition written as a+b+c");
    println!("method 1: {}", chain(&start, predecessor_m1).join(" <- "));
    // Method 2 stops at the first single-part partition {m}, m >= 2, which
    // is never generated as a successor.
    println!("method 2: {}", chain(&start, predecessor_m2).join(" <- "));
}
