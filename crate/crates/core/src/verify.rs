//! The property suite behind `verify all`: every identity checked over a
//! square box, with deterministic output.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::dyck::{
    ce, ci, count_ce, count_ci, enumerate_tilings, find_ce_tiling, is_cover_expansive,
    is_cover_inclusive, CiCondition, CountMode, Side,
};
use crate::error::{Error, Result};
use crate::fweight::{recurrence_sides, weight, weight_all_choices};
use crate::garnir::{garnir_nodes, modified_garnir};
use crate::paren::{chord_relation, hook_formula_f};
use crate::partition::{box_partitions, partitions_of, Node, Partition, SkewShape};
use crate::permmod::{matrix_n, matrix_n_q, matrix_p, matrix_p_q, verify_basis_theorems};

/// Largest box side `verify all` accepts.
pub const MAX_BOX: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<22} {:>6} cases", self.name, self.cases)?;
        if let Some(why) = &self.failure {
            write!(f, "  {why}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_box: usize,
    pub checks: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Runs `check` on every case in parallel and keeps the first failure in
/// case order.
fn run_check<T: Sync>(
    name: &'static str,
    cases: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> CheckLine {
    let failure = cases
        .par_iter()
        .map(|c| check(c).unwrap_or_else(|e| Some(e.to_string())))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    CheckLine {
        name,
        cases: cases.len(),
        passed: failure.is_none(),
        failure,
    }
}

fn nine_conditions(shape: &SkewShape) -> Result<Option<String>> {
    for t in enumerate_tilings(shape)? {
        let first = is_cover_inclusive(&t, CiCondition::CoverInclusive);
        for cond in CiCondition::ALL {
            if is_cover_inclusive(&t, cond) != first {
                return Ok(Some(format!("{cond} disagrees on a tiling of {shape}")));
            }
        }
    }
    Ok(None)
}

fn ce_builder(shape: &SkewShape) -> Result<Option<String>> {
    let found: Vec<_> = enumerate_tilings(shape)?
        .into_iter()
        .filter(|t| is_cover_expansive(t, Side::Both))
        .collect();
    let greedy = find_ce_tiling(shape);
    let ok = match (found.as_slice(), &greedy) {
        ([], None) => true,
        ([t], Some(g)) => t == g,
        _ => false,
    };
    Ok((!ok).then(|| format!("cover-expansive tilings of {shape}: {} found", found.len())))
}

pub fn verify_all(max_box: usize) -> Result<VerifyReport> {
    if max_box > MAX_BOX {
        return Err(Error::CapExceeded {
            cells: max_box * max_box,
            cap: MAX_BOX * MAX_BOX,
        });
    }
    let b = max_box;
    let parts = box_partitions(b, b);
    let pairs: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|l| {
            parts
                .iter()
                .filter(|m| l.contains(m))
                .map(move |m| (l.clone(), m.clone()))
        })
        .collect();
    let shapes: Vec<SkewShape> = pairs
        .iter()
        .map(|(l, m)| SkewShape::new(l.clone(), m.clone()))
        .collect::<Result<_>>()?;
    let sides: Vec<(usize, usize)> = (1..=b).flat_map(|f| (1..=b).map(move |g| (f, g))).collect();
    let small_sides: Vec<(usize, usize)> = sides
        .iter()
        .copied()
        .filter(|&(f, g)| f <= 3 && g <= 3)
        .collect();
    let module_sides: Vec<(usize, usize)> = (2..=(2 * b).min(8))
        .flat_map(|k| (1..k).map(move |f| (f, k - f)))
        .collect();
    let addable: Vec<(Partition, i64)> = parts
        .iter()
        .flat_map(|l| {
            l.addable_nodes()
                .into_iter()
                .map(move |n| (l.clone(), n.column()))
        })
        .collect();
    let mut garnir_cases: Vec<(Partition, Node, usize)> = Vec::new();
    for pi in (2..=2 * b).flat_map(partitions_of) {
        for n in garnir_nodes(&pi) {
            for e in 2..=3 {
                garnir_cases.push((pi.clone(), n, e));
            }
        }
    }

    let checks = vec![
        run_check("nine-conditions", &shapes, nine_conditions),
        run_check("ci-recurrence", &pairs, |(l, m)| {
            let brute = count_ci(l, m, CountMode::BruteForce)?;
            let rec = count_ci(l, m, CountMode::Recurrence)?;
            Ok(
                (brute != rec)
                    .then(|| format!("i({l},{m}): enumeration {brute}, recurrence {rec}")),
            )
        }),
        run_check("ce-recurrence", &pairs, |(l, m)| {
            let brute = count_ce(l, m, CountMode::BruteForce)?;
            let rec = count_ce(l, m, CountMode::Recurrence)?;
            Ok((brute != rec || brute > 1)
                .then(|| format!("e({l},{m}): enumeration {brute}, recurrence {rec}")))
        }),
        run_check("ce-builder", &shapes, ce_builder),
        run_check("chord-relation", &pairs, |(l, m)| {
            Ok((chord_relation(l, m) != ce(l, m))
                .then(|| format!("chord and e disagree on ({l},{m})")))
        }),
        run_check("sum-theorem", &parts, |l| {
            let total: BigUint = parts
                .iter()
                .filter(|m| l.contains(m))
                .map(|m| ci(l, m))
                .sum();
            let (f, hook) = (weight(l), hook_formula_f(l)?);
            Ok((total != f || f != hook)
                .then(|| format!("{l}: Σ i = {total}, F = {f}, hook = {hook}")))
        }),
        run_check("f-recurrence", &addable, |(l, j)| {
            let (lhs, rhs) = recurrence_sides(l, *j)?;
            Ok((lhs != rhs).then(|| format!("{l} column {j}: {lhs} vs {rhs}")))
        }),
        run_check("f-choices", &parts, |l| {
            let values = weight_all_choices(l);
            Ok(values
                .windows(2)
                .any(|w| w[0].1 != w[1].1)
                .then(|| format!("{l}: highest-node choices give {values:?}")))
        }),
        run_check("matrix-inverse", &sides, |&(f, g)| {
            let prod = matrix_n(f, g)?.multiply(&matrix_p(f, g)?)?;
            Ok((!prod.is_identity()).then(|| format!("N·P is not the identity for {f}x{g}")))
        }),
        run_check("q-matrix-inverse", &small_sides, |&(f, g)| {
            let prod = matrix_n_q(f, g)?.multiply(&matrix_p_q(f, g)?)?;
            Ok((!prod.is_identity()).then(|| format!("N(q)·P(q) is not the identity for {f}x{g}")))
        }),
        run_check("module-bases", &module_sides, |&(f, g)| {
            let r = verify_basis_theorems(f, g)?;
            Ok((!r.passed()).then(|| {
                [&r.s_in_t, &r.t_in_s, &r.sum_of_t]
                    .iter()
                    .find_map(|c| c.failure.clone())
                    .unwrap_or_default()
            }))
        }),
        run_check("garnir-terms", &garnir_cases, |(pi, node, e)| {
            for t in modified_garnir(pi, *node, *e, 0)? {
                if t.coeff != weight(&t.lambda) || !t.tableau.is_row_strict() {
                    return Ok(Some(format!(
                        "{pi} at {node}, e={e}: bad term for {}",
                        t.lambda
                    )));
                }
            }
            Ok(None)
        }),
    ];
    Ok(VerifyReport { max_box, checks })
}
