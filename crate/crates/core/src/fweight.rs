//! The weight `F(λ)`, defined by factoring at a highest node.
//!
//! For a highest node `(a, b)` of `λ`, `F(λ) = C(a+b, a) F(σ) F(τ)` where `σ`
//! drops the first `a` rows of `λ` and `τ` drops the first `b` columns.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{strip_remove, x_set, Node, Partition};

/// One step of the factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorStep {
    pub pivot: Node,
    pub sigma: Partition,
    pub tau: Partition,
    #[serde(serialize_with = "crate::json::big_uint")]
    pub binom: BigUint,
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Nodes of maximal height `a + b`, by increasing row.
pub fn highest_nodes(lambda: &Partition) -> Result<Vec<Node>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| Node::new(r as i64 + 1, p as i64));
    let top = rows.clone().map(Node::height).max().unwrap();
    Ok(rows.filter(|n| n.height() == top).collect())
}

pub fn factor_step(lambda: &Partition, pivot: Node) -> Result<FactorStep> {
    let highest = highest_nodes(lambda)?;
    if !highest.contains(&pivot) {
        return Err(Error::Internal(format!(
            "{pivot} is not a highest node of {lambda}"
        )));
    }
    let (a, b) = (pivot.a as usize, pivot.b as usize);
    Ok(FactorStep {
        pivot,
        sigma: lambda.drop_rows(a),
        tau: lambda.drop_columns(b),
        binom: binomial((a + b) as u64, a as u64),
    })
}

static MEMO: LazyLock<RwLock<HashMap<Partition, BigUint>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `F(λ)`, memoized, factoring at the first highest node.
pub fn weight(lambda: &Partition) -> BigUint {
    if lambda.is_empty() {
        return BigUint::one();
    }
    if let Some(v) = MEMO.read().expect("memo lock").get(lambda) {
        return v.clone();
    }
    let pivot = highest_nodes(lambda).expect("non-empty")[0];
    let value = weight_via(lambda, pivot).expect("pivot is highest");
    MEMO.write()
        .expect("memo lock")
        .insert(lambda.clone(), value.clone());
    value
}

/// `F(λ)` factoring first at the given highest node.
pub fn weight_via(lambda: &Partition, pivot: Node) -> Result<BigUint> {
    let step = factor_step(lambda, pivot)?;
    Ok(step.binom * weight(&step.sigma) * weight(&step.tau))
}

/// The value obtained from every choice of highest node.
pub fn weight_all_choices(lambda: &Partition) -> Vec<(Node, BigUint)> {
    if lambda.is_empty() {
        return Vec::new();
    }
    highest_nodes(lambda)
        .expect("non-empty")
        .into_iter()
        .map(|n| (n, weight_via(lambda, n).expect("pivot is highest")))
        .collect()
}

/// Both sides of `F(λ⁺) + Σ_{x ∈ X} F(λ^[x]) = 2 F(λ)` for the addable node
/// of `λ` in column `j`.
pub fn recurrence_sides(lambda: &Partition, j: i64) -> Result<(BigUint, BigUint)> {
    let set = x_set(lambda, j)?;
    let mut lhs = weight(&lambda.add_node(set.addable)?);
    for &x in &set.values {
        lhs += weight(&strip_remove(lambda, j, x)?);
    }
    Ok((lhs, weight(lambda) * 2u32))
}
