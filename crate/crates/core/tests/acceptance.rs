//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use dyck_garnir::dyck::{
    ce, ci, ci_tilings, count_ce, count_ci, enumerate_tilings, has_big_tile_ending_in,
    has_big_tile_starting_in, is_cover_inclusive, left_arrow, right_arrow, CiCondition, CountMode,
    Tile, Tiling, DEFAULT_CAP,
};
use dyck_garnir::fweight::{highest_nodes, recurrence_sides, weight, weight_via};
use dyck_garnir::garnir::{brick_data, modified_garnir, psi_ta_word, sigma_word};
use dyck_garnir::paren::{chord_relation, hook_formula_f};
use dyck_garnir::partition::{
    box_partitions, partition, partitions_of, strip_remove, x_set, ColumnKind, Node, Partition,
    SkewShape,
};
use dyck_garnir::permmod::{
    act, matrix_n, matrix_n_q, matrix_p, matrix_p_q, s_vector, verify_basis_theorems, Flavor,
    GenWord,
};
use num_bigint::BigUint;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn nested_pairs(f: usize, g: usize) -> Vec<(Partition, Partition)> {
    let all = box_partitions(f, g);
    all.iter()
        .flat_map(|l| {
            all.iter()
                .filter(|m| l.contains(m))
                .map(move |m| (l.clone(), m.clone()))
        })
        .collect()
}

fn equivalence_suite() -> Outcome {
    let mut tilings = 0;
    for (l, m) in nested_pairs(4, 4) {
        let shape = SkewShape::new(l.clone(), m.clone()).map_err(e)?;
        for t in enumerate_tilings(&shape).map_err(e)? {
            let first = is_cover_inclusive(&t, CiCondition::ALL[0]);
            for cond in CiCondition::ALL {
                check(is_cover_inclusive(&t, cond) == first, || {
                    format!("{cond} disagrees on a tiling of {shape}")
                })?;
            }
            tilings += 1;
        }
    }
    Ok(format!("{tilings} tilings, 9 conditions each"))
}

fn recurrence_vs_oracle() -> Outcome {
    let pairs = nested_pairs(4, 4);
    for (l, m) in &pairs {
        let (bi, ri) = (
            count_ci(l, m, CountMode::BruteForce).map_err(e)?,
            count_ci(l, m, CountMode::Recurrence).map_err(e)?,
        );
        check(bi == ri, || format!("i({l},{m}): {bi} vs {ri}"))?;
        let (be, re) = (
            count_ce(l, m, CountMode::BruteForce).map_err(e)?,
            count_ce(l, m, CountMode::Recurrence).map_err(e)?,
        );
        check(be == re && be <= 1, || format!("e({l},{m}): {be} vs {re}"))?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn matrix_inverse() -> Outcome {
    let mut largest = 0;
    for f in 1..=4 {
        for g in 1..=4 {
            let prod = matrix_n(f, g)
                .map_err(e)?
                .multiply(&matrix_p(f, g).map_err(e)?)
                .map_err(e)?;
            check(prod.is_identity(), || {
                format!("N·P is not the identity for {f}x{g}")
            })?;
            largest = largest.max(prod.rows.len());
        }
    }
    Ok(format!("16 boxes, largest dimension {largest}"))
}

fn sum_theorem() -> Outcome {
    let parts = box_partitions(4, 4);
    for l in &parts {
        let total: BigUint = parts
            .iter()
            .filter(|m| l.contains(m))
            .map(|m| ci(l, m))
            .sum();
        let (f, hook) = (weight(l), hook_formula_f(l).map_err(e)?);
        check(total == f && f == hook, || {
            format!("{l}: sum {total}, F {f}, hook {hook}")
        })?;
    }
    let worked = partition(&[5, 3, 3, 1]);
    let (f, hook) = (weight(&worked), hook_formula_f(&worked).map_err(e)?);
    check(f == BigUint::from(120u32) && hook == f, || {
        format!("F(5,3,3,1) = {f}, hook {hook}")
    })?;
    Ok(format!("{} partitions, F(5,3,3,1) = 120", parts.len()))
}

fn module_theorems() -> Outcome {
    let mut boxes = 0;
    for k in 2..=8 {
        for f in 1..k {
            let r = verify_basis_theorems(f, k - f).map_err(e)?;
            let failure = [&r.s_in_t, &r.t_in_s, &r.sum_of_t]
                .iter()
                .find_map(|c| c.failure.clone());
            check(r.passed(), || {
                format!("{f}x{}: {}", k - f, failure.unwrap_or_default())
            })?;
            boxes += 1;
        }
    }
    let s = |i| GenWord {
        indices: vec![i],
        flavor: Flavor::S,
    };
    let zero = act(
        &s(3),
        &s_vector(&partition(&[4, 2, 2, 2, 2]), 4, 5).map_err(e)?,
    )
    .map_err(e)?;
    check(zero.is_zero(), || "s3 on (4,2,2,2,2) is not zero".into())?;
    let jumped = act(
        &s(2),
        &s_vector(&partition(&[4, 2, 1, 1, 1]), 4, 5).map_err(e)?,
    )
    .map_err(e)?;
    let target = s_vector(&partition(&[4, 4, 3, 2, 1]), 4, 5).map_err(e)?;
    check(jumped == target, || {
        "s2 on (4,2,1,1,1) does not give (4,4,3,2,1)".into()
    })?;
    Ok(format!("{boxes} boxes plus both case examples"))
}

fn f_recurrence() -> Outcome {
    let mut sides = 0;
    for n in 0..=12 {
        for l in partitions_of(n) {
            for node in l.addable_nodes() {
                let (lhs, rhs) = recurrence_sides(&l, node.column()).map_err(e)?;
                check(lhs == rhs, || {
                    format!("{l} column {}: {lhs} vs {rhs}", node.column())
                })?;
                sides += 1;
            }
        }
    }
    let mut choices = 0;
    for n in 1..=16 {
        for l in partitions_of(n) {
            let first = weight(&l);
            for node in highest_nodes(&l).map_err(e)? {
                let v = weight_via(&l, node).map_err(e)?;
                check(v == first, || format!("{l} at {node}: {v} vs {first}"))?;
                choices += 1;
            }
        }
    }
    Ok(format!(
        "{sides} recurrences, {choices} factorization choices"
    ))
}

fn garnir_reproduction() -> Outcome {
    let coeffs = |terms: &[dyck_garnir::garnir::GarnirTerm]| -> Vec<u32> {
        terms
            .iter()
            .map(|t| u32::try_from(&t.coeff).unwrap_or(0))
            .collect()
    };
    let pi = partition(&[11, 5, 3, 1]);
    let node = Node::new(1, 5);
    let data = brick_data(&pi, node, 3, 0).map_err(e)?;
    let s1 = sigma_word(&data, 1).map_err(e)?.indices;
    let s2 = sigma_word(&data, 2).map_err(e)?.indices;
    check(s1 == [9, 8, 7, 10, 9, 8, 11, 10, 9], || {
        format!("first σ-word {s1:?}")
    })?;
    check(s2 == [12, 11, 10, 13, 12, 11, 14, 13, 12], || {
        format!("second σ-word {s2:?}")
    })?;
    let psi = psi_ta_word(&data).map_err(e)?.indices;
    check(
        psi == [6, 5, 7, 6, 8, 7, 9, 8, 10, 9, 11, 10, 15, 14, 13, 12, 11],
        || format!("ψ word {psi:?}"),
    )?;
    let three = coeffs(&modified_garnir(&pi, node, 3, 0).map_err(e)?);
    check(three == [1, 2, 3], || {
        format!("(11,5,3,1) coefficients {three:?}")
    })?;
    let two = coeffs(&modified_garnir(&partition(&[8, 4]), Node::new(1, 4), 2, 0).map_err(e)?);
    check(two == [1, 2, 3, 3, 6, 6], || {
        format!("(8,4) coefficients {two:?}")
    })?;
    Ok("(1,2,3) and (1,2,3,3,6,6)".into())
}

fn chord_equivalence() -> Outcome {
    let pairs = nested_pairs(4, 4);
    for (l, m) in &pairs {
        check(chord_relation(l, m) == ce(l, m), || {
            format!("chord and e disagree on ({l},{m})")
        })?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn bijection_cardinalities() -> Outcome {
    let count =
        |l: &Partition, m: &Partition, pred: &dyn Fn(&Tiling) -> bool| -> Result<usize, String> {
            Ok(ci_tilings(l, m, DEFAULT_CAP)
                .map_err(e)?
                .iter()
                .filter(|t| pred(t))
                .count())
        };
    let as_count = |n: BigUint| usize::try_from(n).map_err(e);
    let all = box_partitions(3, 3);
    let mut instances = 0;
    for l in &all {
        for m in &all {
            for mnode in m.addable_nodes() {
                let j = mnode.column();
                let mu_plus = m.add_node(mnode).map_err(e)?;
                instances += 1;
                let ColumnKind::Addable(lnode) = l.column_kind(j) else {
                    check(ci(l, m) == ci(l, &mu_plus), || {
                        format!("non-addable column at {l} {m} {j}")
                    })?;
                    continue;
                };
                let lambda_plus = l.add_node(lnode).map_err(e)?;
                let xs = x_set(l, j).map_err(e)?;
                let right = |t: &Tiling| right_arrow(t, j).map(|v| v as i64);
                let left = |t: &Tiling| left_arrow(t, j).map(|v| -(v as i64));

                let lhs = count(l, &mu_plus, &|t| !right(t).is_some_and(|x| xs.contains(x)))?;
                let rhs = count(&lambda_plus, &mu_plus, &|t| has_big_tile_starting_in(t, j))?;
                check(lhs == rhs, || format!("big tile starting at {l} {m} {j}"))?;

                let lhs = count(l, &mu_plus, &|t| !left(t).is_some_and(|x| xs.contains(x)))?;
                let rhs = count(&lambda_plus, &mu_plus, &|t| has_big_tile_ending_in(t, j))?;
                check(lhs == rhs, || format!("big tile ending at {l} {m} {j}"))?;

                for x in xs.positive() {
                    let lhs = count(l, &mu_plus, &|t| right(t) == Some(x))?;
                    let rhs = as_count(ci(&strip_remove(l, j, x).map_err(e)?, &mu_plus))?;
                    check(lhs == rhs, || format!("right strip {x} at {l} {m} {j}"))?;
                }
                for x in xs.negative() {
                    let lhs = count(l, &mu_plus, &|t| left(t) == Some(x))?;
                    let rhs = as_count(ci(&strip_remove(l, j, x).map_err(e)?, &mu_plus))?;
                    check(lhs == rhs, || format!("left strip {x} at {l} {m} {j}"))?;
                }

                let lhs = count(l, m, &|t| t.try_tile_of(mnode).is_none_or(Tile::is_big))?;
                let rhs = count(&lambda_plus, &mu_plus, &|t| {
                    !has_big_tile_starting_in(t, j) && !has_big_tile_ending_in(t, j)
                })?;
                check(lhs == rhs, || {
                    format!("no big tile in column at {l} {m} {j}")
                })?;
            }
        }
    }
    Ok(format!("{instances} instances"))
}

fn q_experiment() -> Outcome {
    for f in 1..=3 {
        for g in 1..=3 {
            let prod = matrix_n_q(f, g)
                .map_err(e)?
                .multiply(&matrix_p_q(f, g).map_err(e)?)
                .map_err(e)?;
            check(prod.is_identity(), || {
                format!("N(q)·P(q) is not the identity for {f}x{g}")
            })?;
        }
    }
    Ok("9 boxes".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 equivalence suite", equivalence_suite),
        ("AC2 recurrence vs oracle", recurrence_vs_oracle),
        ("AC3 matrix inverse", matrix_inverse),
        ("AC4 sum theorem", sum_theorem),
        ("AC5 module theorems", module_theorems),
        ("AC6 F recurrence", f_recurrence),
        ("AC7 Garnir reproduction", garnir_reproduction),
        ("AC8 chord equivalence", chord_equivalence),
        ("AC9 bijection cardinalities", bijection_cardinalities),
        ("AC10 q-experiment", q_experiment),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
