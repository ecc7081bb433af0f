mod common;

use common::p;
use dyck_garnir::dyck::ci;
use dyck_garnir::fweight::{
    highest_nodes, recurrence_sides, weight, weight_all_choices, weight_via,
};
use dyck_garnir::partition::{box_partitions, partitions_of, subpartitions, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn worked_value() {
    assert_eq!(weight(&p(&[5, 3, 3, 1])), BigUint::from(120u32));
    let choices = weight_all_choices(&p(&[5, 3, 3, 1]));
    assert_eq!(choices.len(), 2);
    assert!(choices.iter().all(|(_, v)| *v == BigUint::from(120u32)));
}

#[test]
fn recurrence_up_to_ten() {
    for n in 0..=10 {
        for lambda in partitions_of(n) {
            for node in lambda.addable_nodes() {
                let (lhs, rhs) = recurrence_sides(&lambda, node.column()).unwrap();
                assert_eq!(lhs, rhs, "{lambda} column {}", node.column());
            }
        }
    }
}

#[test]
fn every_highest_node_gives_the_same_value() {
    for n in 1..=12 {
        for lambda in partitions_of(n) {
            let first = weight(&lambda);
            for node in highest_nodes(&lambda).unwrap() {
                assert_eq!(
                    weight_via(&lambda, node).unwrap(),
                    first,
                    "{lambda} at {node}"
                );
            }
        }
    }
}

#[test]
fn recurrence_needs_an_addable_column() {
    assert!(recurrence_sides(&p(&[2, 2]), 0).is_err());
}

#[test]
fn sum_of_inclusive_counts() {
    for lambda in box_partitions(4, 4) {
        let total: BigUint = subpartitions(&lambda).iter().map(|m| ci(&lambda, m)).sum();
        assert_eq!(total, weight(&lambda), "{lambda}");
    }
}

#[test]
fn conjugation_symmetry() {
    for lambda in partitions_of(9) {
        assert_eq!(weight(&lambda), weight(&lambda.conjugate()), "{lambda}");
    }
}

fn small_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..7, 0..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn recurrence_holds(lambda in small_partition()) {
        for node in lambda.addable_nodes() {
            let (lhs, rhs) = recurrence_sides(&lambda, node.column()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weight_at_least_subpartition_count(lambda in small_partition()) {
        prop_assert!(weight(&lambda) >= BigUint::from(subpartitions(&lambda).len()));
    }
}
