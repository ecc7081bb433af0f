//! The counts `i(λ,μ)` of cover-inclusive tilings and `e(λ,μ)` of
//! cover-expansive tilings, by enumeration and by recurrence.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{strip_remove, x_set, ColumnKind, Node, Partition, SkewShape};

use super::conditions::{
    find_ce_tiling, is_cover_expansive, is_cover_inclusive, CiCondition, Side,
};
use super::enumerate::{for_each_tiling, DEFAULT_CAP};
use super::tile::Tiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMode {
    BruteForce,
    Recurrence,
}

type Memo<V> = LazyLock<RwLock<HashMap<(Partition, Partition), V>>>;

static CI_MEMO: Memo<BigUint> = LazyLock::new(|| RwLock::new(HashMap::new()));
static CE_MEMO: Memo<bool> = LazyLock::new(|| RwLock::new(HashMap::new()));

fn recall<V: Clone>(memo: &Memo<V>, key: &(Partition, Partition)) -> Option<V> {
    memo.read().expect("memo lock").get(key).cloned()
}

fn store<V>(memo: &Memo<V>, key: (Partition, Partition), value: V) {
    memo.write().expect("memo lock").insert(key, value);
}

/// The column used to step the recurrences: the leftmost column in which
/// `μ` has an addable node that is a node of `λ`.
pub fn recurrence_column(lambda: &Partition, mu: &Partition) -> Option<(i64, Node)> {
    mu.addable_nodes()
        .into_iter()
        .find(|&n| lambda.has_node(n))
        .map(|n| (n.column(), n))
}

/// Cover-inclusive tilings of `λ∖μ`, by enumeration. Empty when `λ ⊉ μ`.
pub fn ci_tilings(lambda: &Partition, mu: &Partition, cap: usize) -> Result<Vec<Tiling>> {
    if !lambda.contains(mu) {
        return Ok(Vec::new());
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let mut out = Vec::new();
    for_each_tiling(&shape, cap, |t| {
        if is_cover_inclusive(&t, CiCondition::CoverInclusive) {
            out.push(t);
        }
    })?;
    Ok(out)
}

/// `i(λ,μ)`.
pub fn count_ci(lambda: &Partition, mu: &Partition, mode: CountMode) -> Result<BigUint> {
    match mode {
        CountMode::BruteForce => Ok(BigUint::from(ci_tilings(lambda, mu, DEFAULT_CAP)?.len())),
        CountMode::Recurrence => Ok(ci(lambda, mu)),
    }
}

/// `e(λ,μ)`, which is always 0 or 1.
pub fn count_ce(lambda: &Partition, mu: &Partition, mode: CountMode) -> Result<u32> {
    match mode {
        CountMode::BruteForce => {
            if !lambda.contains(mu) {
                return Ok(0);
            }
            let shape = SkewShape::new(lambda.clone(), mu.clone())?;
            let mut n = 0;
            for_each_tiling(&shape, DEFAULT_CAP, |t| {
                if is_cover_expansive(&t, Side::Both) {
                    n += 1;
                }
            })?;
            Ok(n)
        }
        CountMode::Recurrence => Ok(ce(lambda, mu) as u32),
    }
}

/// `i(λ,μ)` by the memoized recurrence.
pub fn ci(lambda: &Partition, mu: &Partition) -> BigUint {
    if !lambda.contains(mu) {
        return BigUint::zero();
    }
    if lambda == mu {
        return BigUint::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = recall(&CI_MEMO, &key) {
        return v;
    }
    let (j, node) =
        recurrence_column(lambda, mu).expect("a proper subpartition has an addable node inside");
    let mu_plus = mu.add_node(node).expect("addable");
    let value = match lambda.column_kind(j) {
        ColumnKind::Addable(l) => {
            let lambda_plus = lambda.add_node(l).expect("addable");
            let strips = x_set(lambda, j).expect("addable column");
            let mut total = BigInt::from(ci(&lambda_plus, &mu_plus));
            for x in strips.values {
                let smaller = strip_remove(lambda, j, x).expect("x from the strip set");
                total += BigInt::from(ci(&smaller, &mu_plus));
            }
            total -= BigInt::from(ci(lambda, &mu_plus));
            total.to_biguint().expect("tiling counts are non-negative")
        }
        _ => ci(lambda, &mu_plus),
    };
    store(&CI_MEMO, key, value.clone());
    value
}

/// `e(λ,μ) = 1` by the memoized recurrence.
pub fn ce(lambda: &Partition, mu: &Partition) -> bool {
    if !lambda.contains(mu) {
        return false;
    }
    if lambda == mu {
        return true;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = recall(&CE_MEMO, &key) {
        return v;
    }
    let (j, node) =
        recurrence_column(lambda, mu).expect("a proper subpartition has an addable node inside");
    let value = match lambda.column_kind(j) {
        ColumnKind::Addable(l) => {
            let mu_plus = mu.add_node(node).expect("addable");
            let lambda_plus = lambda.add_node(l).expect("addable");
            // At most one of the two terms is 1.
            ce(lambda, &mu_plus) || ce(&lambda_plus, &mu_plus)
        }
        ColumnKind::Removable(r) => ce(&lambda.remove_node(r).expect("removable"), mu),
        ColumnKind::Neither => false,
    };
    store(&CE_MEMO, key, value);
    value
}

/// Checks `e(λ,μ⁺) + e(λ⁺,μ⁺) ≤ 1` along the recurrence; used by the tests
/// to make sure the boolean shortcut in [`ce`] hides nothing.
pub fn ce_terms(lambda: &Partition, mu: &Partition) -> Result<Option<(bool, bool)>> {
    let Some((j, node)) = recurrence_column(lambda, mu) else {
        return Ok(None);
    };
    match lambda.column_kind(j) {
        ColumnKind::Addable(l) => {
            let mu_plus = mu.add_node(node)?;
            let lambda_plus = lambda.add_node(l)?;
            let terms = (ce(lambda, &mu_plus), ce(&lambda_plus, &mu_plus));
            if terms.0 && terms.1 {
                return Err(Error::Internal(format!("e({lambda},{mu}) would be 2")));
            }
            Ok(Some(terms))
        }
        _ => Ok(None),
    }
}

/// The cover-expansive tiling of `λ∖μ`, if any.
pub fn ce_tiling(lambda: &Partition, mu: &Partition) -> Option<Tiling> {
    if !lambda.contains(mu) {
        return None;
    }
    find_ce_tiling(&SkewShape::new(lambda.clone(), mu.clone()).ok()?)
}
