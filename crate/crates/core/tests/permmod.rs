mod common;

use common::p;
use dyck_garnir::partition::box_partitions;
use dyck_garnir::permmod::{
    act, generator_word, harp_check, harp_check_direct, matrix_n, matrix_n_q, matrix_p, matrix_p_q,
    s_action_case, s_coefficient, s_vector, subset_table, verify_basis_theorems, ActionCase,
    Flavor, GenWord, Harpoon, ModVec,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const BOXES: [(usize, usize); 7] = [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2), (2, 4), (3, 3)];

fn s_word(indices: &[usize]) -> GenWord {
    GenWord {
        indices: indices.to_vec(),
        flavor: Flavor::S,
    }
}

#[test]
fn case_prediction_matches_action() {
    for (f, g) in BOXES.into_iter().chain([(4, 4), (4, 5)]) {
        for mu in box_partitions(f, g) {
            let v = s_vector(&mu, f, g).unwrap();
            for i in 1..f + g {
                let c = s_action_case(&mu, i, f, g).unwrap();
                let direct = v.apply_s(i);
                assert_eq!(
                    c.predicted(&mu, f, g).unwrap(),
                    direct,
                    "{mu} i={i} in {f}x{g}: {c:?}"
                );
            }
        }
    }
}

#[test]
fn every_case_occurs() {
    let mut seen = std::collections::HashSet::new();
    for mu in box_partitions(4, 5) {
        for i in 1..9 {
            seen.insert(s_action_case(&mu, i, 4, 5).unwrap().case);
        }
    }
    for c in [
        ActionCase::One,
        ActionCase::Two,
        ActionCase::ThreeA,
        ActionCase::ThreeB,
        ActionCase::FourA,
        ActionCase::FourB,
    ] {
        assert!(seen.contains(&c), "{c:?}");
    }
}

#[test]
fn worked_jump_examples() {
    let m = ModVec::generator(4, 5);
    let zero = act(
        &s_word(&[3]),
        &s_vector(&p(&[4, 2, 2, 2, 2]), 4, 5).unwrap(),
    )
    .unwrap();
    assert!(zero.is_zero());
    let jumped = act(
        &s_word(&[2]),
        &s_vector(&p(&[4, 2, 1, 1, 1]), 4, 5).unwrap(),
    )
    .unwrap();
    assert_eq!(jumped, s_vector(&p(&[4, 4, 3, 2, 1]), 4, 5).unwrap());
    let w = generator_word(&p(&[4, 4, 3, 2, 1]), 4, 5, Flavor::S).unwrap();
    assert_eq!(act(&w, &m).unwrap(), jumped);
    assert!(harp_check(
        &p(&[4, 2, 1, 1, 1]),
        &p(&[4, 4, 3, 2, 1]),
        2,
        4,
        5,
        Harpoon::Left
    )
    .unwrap());
    assert!(!harp_check(
        &p(&[4, 2, 1, 1, 1]),
        &p(&[4, 4, 3, 2, 1]),
        2,
        4,
        5,
        Harpoon::Right
    )
    .unwrap());
}

#[test]
fn harpoon_descriptions_agree() {
    for (f, g) in BOXES.into_iter().chain([(4, 4)]) {
        let parts = box_partitions(f, g);
        for mu in &parts {
            for lambda in &parts {
                for i in 1..f + g {
                    for dir in [Harpoon::Right, Harpoon::Left] {
                        assert_eq!(
                            harp_check(mu, lambda, i, f, g, dir).unwrap(),
                            harp_check_direct(mu, lambda, i, f, g, dir).unwrap(),
                            "{mu} -> {lambda}, i={i}, {dir:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn coefficients_from_the_rim() {
    for (f, g) in BOXES {
        let table = subset_table(f, g).unwrap();
        let s_vecs: Vec<ModVec> = table
            .iter()
            .map(|(l, _)| s_vector(l, f, g).unwrap())
            .collect();
        for (mu, v) in table.iter().map(|(l, _)| l).zip(&s_vecs) {
            for i in 1..f + g {
                let mut rebuilt = ModVec::zero(f, g);
                for (lambda, w) in table.iter().map(|(l, _)| l).zip(&s_vecs) {
                    let c = s_coefficient(lambda, mu, i, f, g).unwrap();
                    rebuilt.add_scaled(w, &BigInt::from(c));
                }
                assert_eq!(rebuilt, v.apply_s(i), "{mu} i={i}");
            }
        }
    }
}

#[test]
fn generator_relations_on_the_module() {
    let (f, g) = (3, 3);
    for mu in box_partitions(f, g) {
        let v = s_vector(&mu, f, g).unwrap();
        for i in 1..f + g {
            let twice = v.apply_s(i).apply_s(i);
            assert_eq!(twice, v.apply_s(i).scaled(&BigInt::from(-2)));
            if i + 1 < f + g {
                let braid = v.apply_s(i).apply_s(i + 1).apply_s(i);
                let mut diff = braid;
                diff.add_scaled(&v.apply_s(i), &BigInt::from(-1));
                let other = v.apply_s(i + 1).apply_s(i).apply_s(i + 1);
                let mut diff2 = other;
                diff2.add_scaled(&v.apply_s(i + 1), &BigInt::from(-1));
                assert_eq!(diff, diff2);
            }
        }
    }
}

#[test]
fn annihilator_kills_the_generator() {
    for (f, g) in [(2, 2), (3, 3), (2, 4)] {
        let m = ModVec::generator(f, g);
        for i in 1..f + g - 1 {
            let mut v = act(&s_word(&[i, i + 1, i]), &m).unwrap();
            v.add_scaled(&act(&s_word(&[i]), &m).unwrap(), &BigInt::from(-1));
            assert!(v.is_zero(), "i={i} in {f}x{g}");
        }
    }
}

#[test]
fn basis_theorems_up_to_eight() {
    for k in 2..=8 {
        for f in 1..k {
            let r = verify_basis_theorems(f, k - f).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn matrices_are_inverse() {
    for (f, g) in [(1, 1), (2, 2), (3, 2), (3, 3), (4, 3)] {
        let n = matrix_n(f, g).unwrap();
        let pm = matrix_p(f, g).unwrap();
        assert!(n.multiply(&pm).unwrap().is_identity(), "{f}x{g}");
        assert!(pm.multiply(&n).unwrap().is_identity(), "{f}x{g}");
    }
    for (f, g) in [(2, 3), (3, 3)] {
        let prod = matrix_n_q(f, g)
            .unwrap()
            .multiply(&matrix_p_q(f, g).unwrap())
            .unwrap();
        assert!(prod.is_identity(), "{f}x{g}");
    }
}

proptest! {
    #[test]
    fn s_words_match_case_steps(f in 1usize..4, g in 1usize..4, pick in 0usize..64, i_pick in 0usize..8) {
        let parts = box_partitions(f, g);
        let mu = &parts[pick % parts.len()];
        let i = 1 + i_pick % (f + g - 1);
        let c = s_action_case(mu, i, f, g).unwrap();
        let lhs = act(&s_word(&[i]), &s_vector(mu, f, g).unwrap()).unwrap();
        prop_assert_eq!(c.predicted(mu, f, g).unwrap(), lhs);
    }
}
