use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_partition-evolve"));
    cmd.env_remove("PARTITION_EVOLVE_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "5"]).status.code(), Some(0));
    assert_eq!(
        run(&["count", "61", "--source", "evolve1"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", "5", "--method", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["predecessor", "6", "--method", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn cap_from_env_and_flag() {
    let o = bin()
        .env("PARTITION_EVOLVE_CAP", "4")
        .args(["list", "5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin()
        .env("PARTITION_EVOLVE_CAP", "4")
        .args(["list", "5", "--cap", "5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn list_line_count_matches_every_count_source() {
    for n in [0, 1, 7, 13] {
        let lines = stdout(&run(&["list", &n.to_string()])).lines().count();
        for source in ["series", "oracle", "evolve1", "evolve2"] {
            let count: usize = stdout(&run(&["count", &n.to_string(), "--source", source]))
                .trim()
                .parse()
                .unwrap();
            assert_eq!(count, lines, "n={n} source={source}");
        }
    }
}

#[test]
fn list_jsonl() {
    let o = run(&["list", "2", "--format", "jsonl"]);
    assert_eq!(
        stdout(&o),
        "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1,1],\"tag\":\"Seed\"}\n"
    );
}

#[test]
fn snapshot_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let snap = dir.path().join("level9.jsonl");
    let o = run(&[
        "evolve",
        "0",
        "9",
        "--method",
        "1",
        "--snapshot-out",
        snap.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());

    let again = dir.path().join("again.jsonl");
    let o = run(&[
        "evolve",
        "9",
        "9",
        "--snapshot-in",
        snap.to_str().unwrap(),
        "--snapshot-out",
        again.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(fs::read(&snap).unwrap(), fs::read(&again).unwrap());

    let o = run(&[
        "evolve",
        "9",
        "10",
        "--method",
        "2",
        "--snapshot-in",
        snap.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&run(&["list", "10"])));
}

#[test]
fn bad_snapshots_are_rejected_with_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("unsorted", "{\"n\":3,\"parts\":[3],\"tag\":\"Seed\"}\n{\"n\":3,\"parts\":[1,2],\"tag\":\"Seed\"}\n", "line 2"),
        ("weight", "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1,1,1],\"tag\":\"Seed\"}\n", "line 2"),
        ("dup", "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1,1],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n", "line 3"),
        ("incomplete", "{\"n\":3,\"parts\":[3],\"tag\":\"Seed\"}\n{\"n\":3,\"parts\":[2,1],\"tag\":\"Seed\"}\n", "expected 3"),
    ];
    for (name, body, needle) in cases {
        let path = dir.path().join(format!("{name}.jsonl"));
        fs::write(&path, body).unwrap();
        let from = if name == "unsorted" || name == "incomplete" {
            "3"
        } else {
            "2"
        };
        let o = run(&["evolve", from, "4", "--snapshot-in", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).contains(needle), "{name}: {}", stderr(&o));
    }
    let path = dir.path().join("wrong_n.jsonl");
    fs::write(
        &path,
        "{\"n\":2,\"parts\":[2],\"tag\":\"Seed\"}\n{\"n\":2,\"parts\":[1,1],\"tag\":\"Seed\"}\n",
    )
    .unwrap();
    let o = run(&["evolve", "3", "4", "--snapshot-in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_rows_and_counts() {
    let o = run(&["bench", "30", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,method,wall_time_ns,partitions_emitted")
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 3 * 31 * 3);
    for row in &rows {
        let n: usize = row[0].parse().unwrap();
        let emitted: u64 = row[3].parse().unwrap();
        assert_eq!(
            partition_evolve::count_oracle(n),
            num_bigint::BigUint::from(emitted),
            "{row:?}"
        );
    }
    let o = run(&["bench", "0", "1"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",1")));
}

#[test]
fn verify_output_is_deterministic_and_passes() {
    let a = run(&["verify", "20"]);
    let b = run(&["verify", "20"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("overall: PASS\n"));
}

#[test]
fn coefficient_csv_dump() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coeffs.csv");
    let o = run(&["count", "6", "--coeffs-csv", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "11\n");
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        "n,P,Q\n0,1,0\n1,1,1\n2,2,1\n3,3,2\n4,5,2\n5,7,4\n6,11,4\n"
    );
}
