// Save a level as JSON Lines and resume evolution from it later.
//
// cargo run --example snapshot_resume

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};

use partition_evolve::{evolve_m1, evolve_m2, Level};

pub fn main() {
    let dir = std::env::temp_dir().join(format!("partition-evolve-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("level10.jsonl");

    let ten = evolve_m1(&Level::seed(), 10).unwrap();
    let mut w = BufWriter::new(File::create(&path).unwrap());
    ten.write_jsonl(&mut w).unwrap();
    w.flush().unwrap();
    println!("wrote {} partitions of 10 to {}", ten.len(), path.display());

    let restored = Level::read_jsonl(BufReader::new(File::open(&path).unwrap())).unwrap();
    // Resume with the other method; the level is the same set either way.
    let twelve = evolve_m2(&restored, 12).unwrap();
    println!("resumed to n=12: {} partitions", twelve.len());
    for (tag, count) in twelve.tag_counts() {
        println!("  {tag}: {count}");
    }
    std::fs::remove_dir_all(&dir).ok();
}
