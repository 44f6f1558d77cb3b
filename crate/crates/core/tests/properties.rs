use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use partition_evolve::level::Provenance;
use partition_evolve::series::check_recurrence_with;
use partition_evolve::{
    classify_m1, compare, count_oracle, enumerate_oracle, euler_p_coeffs, evolve, evolve_m1,
    evolve_m2, geometric_factor, make_partition, predecessor_m1, predecessor_m2, q_coeffs,
    series_mul, successors_m1, successors_m2, EvolveOptions, Kind, Level, Method1, Method2,
    Partition, Series,
};
use proptest::prelude::*;

fn level(n: usize) -> Level {
    enumerate_oracle(n, usize::MAX).unwrap()
}

fn all_up_to(max: usize) -> Vec<Partition> {
    (0..=max)
        .flat_map(|n| level(n).partitions().cloned().collect::<Vec<_>>())
        .collect()
}

#[test]
fn compare_is_a_total_order_up_to_twelve() {
    let all = all_up_to(12);
    for a in &all {
        assert_eq!(compare(a, a), Ordering::Equal);
        for b in &all {
            let ab = compare(a, b);
            assert_eq!(ab, compare(b, a).reverse());
            assert_eq!(ab == Ordering::Equal, a == b);
        }
    }
    // Sorting is consistent with pairwise comparison, which with antisymmetry
    // above gives transitivity on this set.
    let mut sorted = all.clone();
    sorted.sort_by(compare);
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            assert_eq!(compare(a, b), Ordering::Less);
        }
    }
}

#[test]
fn smallest_part_multiplicity_decides_first_method_kind() {
    for p in all_up_to(20).iter().filter(|p| !p.is_empty()) {
        let smallest = *p.parts().last().unwrap();
        let multiplicity = p.parts().iter().filter(|&&x| x == smallest).count();
        let expected = if multiplicity == 1 {
            Kind::SecondKind
        } else {
            Kind::FirstKind
        };
        assert_eq!(classify_m1(p), expected, "{p}");
    }
}

#[test]
fn method1_successors_are_a_bijection_up_to_thirty() {
    for n in 0..=30 {
        let src = level(n);
        let mut seen = HashSet::new();
        for p in src.partitions() {
            let succ = successors_m1(p);
            let expected = match classify_m1(p) {
                Kind::FirstKind => 1,
                Kind::SecondKind => 2,
            };
            assert_eq!(succ.len(), expected, "{p}");
            for s in succ {
                assert_eq!(predecessor_m1(&s.partition).unwrap(), *p);
                assert!(seen.insert(s.partition), "duplicate successor at n={n}");
            }
            if !p.is_empty() {
                let pred = predecessor_m1(p).unwrap();
                assert!(successors_m1(&pred).iter().any(|s| &s.partition == p));
            }
        }
        let next = level(n + 1);
        assert_eq!(seen.len(), next.len());
        assert!(next.partitions().all(|p| seen.contains(p)));
    }
}

#[test]
fn method2_successors_cover_all_but_the_single_part() {
    for n in 0..=30 {
        let src = level(n);
        let mut seen = HashSet::new();
        for p in src.partitions() {
            for s in successors_m2(p) {
                let units = s.partition.unit_count().get();
                match s.tag {
                    Provenance::AddedUnit => assert!(units >= 1),
                    Provenance::Collected => assert_eq!(units, 0, "{}", s.partition),
                    other => panic!("unexpected tag {other}"),
                }
                assert_eq!(predecessor_m2(&s.partition).unwrap(), *p);
                assert!(seen.insert(s.partition), "duplicate successor at n={n}");
            }
        }
        let single = Partition::from_canonical(vec![n + 1]).unwrap();
        let next = level(n + 1);
        if n == 0 {
            assert!(seen.contains(&single));
            assert_eq!(seen.len(), next.len());
        } else {
            assert!(!seen.contains(&single));
            assert_eq!(seen.len() + 1, next.len());
            assert!(predecessor_m2(&single).is_err());
        }
        assert!(next.partitions().all(|p| p == &single || seen.contains(p)));
    }
}

#[test]
fn evolution_matches_oracle_up_to_forty() {
    let mut m1 = Level::seed();
    let mut m2 = Level::seed();
    for n in 0..=40 {
        if n > 0 {
            m1 = evolve_m1(&m1, n).unwrap();
            m2 = evolve_m2(&m2, n).unwrap();
        }
        let oracle = level(n);
        assert!(m1.same_partitions(&oracle), "method1 n={n}");
        assert!(m2.same_partitions(&oracle), "method2 n={n}");
        assert_eq!(BigUint::from(oracle.len()), count_oracle(n));
    }
}

#[test]
fn parallel_evolution_is_identical() {
    let seq = evolve(
        &Method2,
        &Level::seed(),
        25,
        EvolveOptions { parallel: false },
    )
    .unwrap();
    let par = evolve(
        &Method2,
        &Level::seed(),
        25,
        EvolveOptions { parallel: true },
    )
    .unwrap();
    assert_eq!(seq.members(), par.members());
    let seq = evolve(
        &Method1,
        &Level::seed(),
        25,
        EvolveOptions { parallel: false },
    )
    .unwrap();
    let par = evolve(
        &Method1,
        &Level::seed(),
        25,
        EvolveOptions { parallel: true },
    )
    .unwrap();
    assert_eq!(seq.members(), par.members());
}

#[test]
fn alternating_methods_still_cover_every_level() {
    let mut current = Level::seed();
    for n in 1..=20 {
        current = if n % 2 == 0 {
            evolve(&Method1, &current, n, EvolveOptions::default())
        } else {
            evolve(&Method2, &current, n, EvolveOptions::default())
        }
        .unwrap();
        assert!(current.same_partitions(&level(n)));
    }
}

#[test]
fn snapshot_round_trip_reproduces_level() {
    let original = evolve_m2(&Level::seed(), 12).unwrap();
    let mut buf = Vec::new();
    original.write_jsonl(&mut buf).unwrap();
    let restored = Level::read_jsonl(buf.as_slice()).unwrap();
    assert_eq!(restored.members(), original.members());
    let resumed = evolve_m2(&restored, 12).unwrap();
    assert_eq!(resumed.members(), original.members());
    let further = evolve_m2(&restored, 13).unwrap();
    assert!(further.same_partitions(&level(13)));
}

#[test]
fn euler_coefficients_are_truncation_stable() {
    for n in [0, 1, 5, 17, 40] {
        let short = euler_p_coeffs(n);
        let long = euler_p_coeffs(n + 10);
        assert_eq!(short[..], long[..=n]);
        let short = q_coeffs(n);
        let long = q_coeffs(n + 10);
        assert_eq!(short[..], long[..=n]);
    }
}

#[test]
fn q_counts_partitions_with_a_unique_smallest_part() {
    let q = q_coeffs(40);
    for n in 0..=40 {
        let unique_smallest = level(n)
            .partitions()
            .filter(|p| {
                p.parts()
                    .last()
                    .is_some_and(|s| p.parts().iter().filter(|&x| x == s).count() == 1)
            })
            .count();
        assert_eq!(q[n], BigInt::from(unique_smallest), "n={n}");
    }
}

#[test]
fn series_and_counter_agree_to_three_hundred() {
    let p = euler_p_coeffs(300);
    let mut counter = partition_evolve::PartitionCounter::new();
    for (n, pn) in p.iter().enumerate() {
        assert_eq!(&BigInt::from(counter.count(n)), pn, "n={n}");
    }
    assert_eq!(p[200].to_string(), "3972999029388");
}

#[test]
fn recurrence_and_difference_agree_to_two_hundred() {
    let p = euler_p_coeffs(200);
    let q = q_coeffs(200);
    assert!(check_recurrence_with(&p, &q).passed());
    for n in 0..200 {
        assert_eq!(&p[n + 1] - &p[n], q[n]);
    }
}

#[test]
fn frozen_counts() {
    assert_eq!(count_oracle(10), BigUint::from(42u32));
    assert_eq!(count_oracle(20), BigUint::from(627u32));
    assert_eq!(count_oracle(50), BigUint::from(204_226u32));
    assert_eq!(count_oracle(60), BigUint::from(966_467u32));
    assert_eq!(level(10).len(), 42);
}

fn arb_series(degree: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-1000i64..1000, degree + 1)
        .prop_map(move |c| Series::from_coeffs(degree, c))
}

fn arb_triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0usize..=64).prop_flat_map(|d| (arb_series(d), arb_series(d), arb_series(d)))
}

proptest! {
    #[test]
    fn series_mul_commutes_and_associates((a, b, c) in arb_triple()) {
        let ab = series_mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &series_mul(&b, &a).unwrap());
        let left = series_mul(&ab, &c).unwrap();
        let right = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn geometric_factor_inverts_one_minus_q_j(j in 1usize..20, n in 0usize..40) {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = 1;
        if j <= n {
            coeffs[j] = -1;
        }
        let one_minus = Series::from_coeffs(n, coeffs);
        let product = series_mul(&one_minus, &geometric_factor(j, n).unwrap()).unwrap();
        prop_assert_eq!(product, Series::one(n));
    }

    #[test]
    fn make_partition_is_idempotent(raw in prop::collection::vec(1i64..30, 0..12)) {
        let p = make_partition(&raw).unwrap();
        prop_assert!(p.is_valid());
        prop_assert_eq!(p.weight() as i64, raw.iter().sum::<i64>());
        let again = make_partition(&p.parts().iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(&again, &p);
        let text: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(text, p);
    }

    #[test]
    fn make_partition_rejects_nonpositive(
        mut raw in prop::collection::vec(1i64..30, 0..8),
        bad in -5i64..=0,
        at in 0usize..8,
    ) {
        let at = at.min(raw.len());
        raw.insert(at, bad);
        let rejected = matches!(
            make_partition(&raw),
            Err(partition_evolve::Error::NonPositivePart { index, value }) if index == at && value == bad
        );
        prop_assert!(rejected);
    }
}
