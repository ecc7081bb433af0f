mod common;

use common::{nested_pairs, p};
use dyck_garnir::dyck::ce;
use dyck_garnir::fweight::weight;
use dyck_garnir::paren::{
    chord_relation, hook_formula_f, nesting_poset, paren_sequence, symbol_at, NestPoset,
};
use dyck_garnir::partition::{box_partitions, partitions_of, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Linear extensions by dynamic programming over placed sets: a pair can
/// be placed once every pair enclosing it is placed.
fn linear_extensions(poset: &NestPoset) -> BigUint {
    let n = poset.len();
    let mut ways = vec![BigUint::default(); 1 << n];
    ways[0] = BigUint::from(1u8);
    for mask in 0..(1usize << n) {
        if ways[mask] == BigUint::default() {
            continue;
        }
        for x in 0..n {
            if mask >> x & 1 == 1 {
                continue;
            }
            let ready = (0..n).all(|y| !poset.above(x, y) || mask >> y & 1 == 1);
            if ready {
                let w = ways[mask].clone();
                ways[mask | 1 << x] += w;
            }
        }
    }
    ways[(1 << n) - 1].clone()
}

#[test]
fn hook_count_matches_brute_force() {
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let min = paren_sequence(&lambda).pair_count();
            for size in min..=(min + 2).min(12) {
                let poset = nesting_poset(&lambda, size).unwrap();
                assert_eq!(
                    poset.hook_count(),
                    linear_extensions(&poset),
                    "{lambda} N={size}"
                );
            }
        }
    }
}

#[test]
fn hook_formula_is_the_weight() {
    for lambda in box_partitions(4, 4) {
        assert_eq!(
            hook_formula_f(&lambda).unwrap(),
            weight(&lambda),
            "{lambda}"
        );
    }
    assert_eq!(
        hook_formula_f(&p(&[5, 3, 3, 1])).unwrap(),
        BigUint::from(120u32)
    );
}

#[test]
fn chord_relation_is_cover_expansive_existence() {
    for (lambda, mu) in nested_pairs(4, 4) {
        assert_eq!(
            chord_relation(&lambda, &mu),
            ce(&lambda, &mu),
            "({lambda}, {mu})"
        );
    }
    for lambda in box_partitions(3, 3) {
        for mu in box_partitions(3, 3) {
            if !lambda.contains(&mu) {
                assert!(!chord_relation(&lambda, &mu), "({lambda}, {mu})");
            }
        }
    }
}

#[test]
fn window_positions() {
    let lambda = p(&[5, 3, 3, 1]);
    let seq = paren_sequence(&lambda);
    assert_eq!(seq.offset, -4);
    for (k, &open) in seq.window.iter().enumerate() {
        assert_eq!(open, symbol_at(&lambda, seq.offset + k as i64));
    }
    assert!(symbol_at(&lambda, -100));
    assert!(!symbol_at(&lambda, 100));
}

#[test]
fn small_truncation_is_rejected() {
    let min = paren_sequence(&p(&[3, 1])).pair_count();
    assert!(nesting_poset(&p(&[3, 1]), min - 1).is_err());
}

fn small_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..8, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn padded_sequence_is_balanced(lambda in small_partition()) {
        let seq = paren_sequence(&lambda);
        let padded = seq.padded();
        let mut depth = 0i64;
        for open in padded.iter() {
            depth += if *open { 1 } else { -1 };
            prop_assert!(depth >= 0);
        }
        prop_assert_eq!(depth, 0);
        prop_assert_eq!(seq.pair_count() * 2, padded.len());
        prop_assert_eq!(seq.window.len(), lambda.first_part() + lambda.len());
    }

    #[test]
    fn hook_formula_agrees_with_weight(lambda in small_partition()) {
        prop_assert_eq!(hook_formula_f(&lambda).unwrap(), weight(&lambda));
    }
}
