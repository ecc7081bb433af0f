//! Direct checks of the three basis expansions in `M^(f,g)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{s_vector, subset_table, ModVec};
use crate::dyck::{ce, ci};
use crate::error::{Error, Result};
use crate::fweight::weight;
use crate::partition::Partition;

/// Largest `f + g` checked without an explicit cap.
pub const DEFAULT_MODULE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub passed: bool,
    /// Number of partitions checked.
    pub cases: usize,
    /// First failure, if any.
    pub failure: Option<String>,
}

impl Check {
    fn from_failures(cases: usize, mut failures: Vec<String>) -> Check {
        failures.sort();
        Check {
            passed: failures.is_empty(),
            cases,
            failure: failures.into_iter().next(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub f: usize,
    pub g: usize,
    /// `s_μ m = Σ_λ (-1)^{|λ|+|μ|} e(λ, μ) t_λ m`.
    pub s_in_t: Check,
    /// `t_μ m = Σ_λ i(λ, μ) s_λ m`.
    pub t_in_s: Check,
    /// `Σ_μ t_μ m = Σ_λ F(λ) s_λ m`.
    pub sum_of_t: Check,
    /// The coefficients of `Σ_μ t_μ m` in the `s` basis, solved for
    /// directly, in box order.
    #[serde(serialize_with = "coefficients")]
    pub sum_coefficients: Vec<(Partition, BigInt)>,
}

fn coefficients<S: serde::Serializer>(
    v: &[(Partition, BigInt)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (l, c) in v {
        seq.serialize_element(
            &serde_json::json!({ "lambda": l, "coeff": crate::json::to_value(c) }),
        )?;
    }
    seq.end()
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.s_in_t.passed && self.t_in_s.passed && self.sum_of_t.passed
    }
}

pub fn verify_basis_theorems(f: usize, g: usize) -> Result<BasisReport> {
    verify_basis_theorems_capped(f, g, DEFAULT_MODULE_CAP)
}

/// Builds every `s_λ m` by acting on subsets and compares it with the
/// tiling numbers.
pub fn verify_basis_theorems_capped(f: usize, g: usize, cap: usize) -> Result<BasisReport> {
    if f + g > cap {
        return Err(Error::CapExceeded { cells: f + g, cap });
    }
    let table = subset_table(f, g)?;
    let subset: HashMap<&Partition, u64> = table.iter().map(|(l, s)| (l, *s)).collect();
    let s_vecs: Vec<ModVec> = table
        .par_iter()
        .map(|(l, _)| s_vector(l, f, g))
        .collect::<Result<_>>()?;
    let cases = table.len();

    let s_in_t_failures: Vec<String> = table
        .par_iter()
        .zip(&s_vecs)
        .filter_map(|((mu, _), v)| {
            let mut expected = ModVec::zero(f, g);
            for (lambda, _) in &table {
                if ce(lambda, mu) {
                    let sign = if (lambda.size() + mu.size()) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    expected.add_scaled(&ModVec::basis(f, g, subset[lambda]), &BigInt::from(sign));
                }
            }
            (&expected != v).then(|| format!("s_{mu} m = {v}, expected {expected}"))
        })
        .collect();

    let t_in_s_failures: Vec<String> = table
        .par_iter()
        .filter_map(|(mu, s)| {
            let mut sum = ModVec::zero(f, g);
            for ((lambda, _), v) in table.iter().zip(&s_vecs) {
                sum.add_scaled(v, &BigInt::from(ci(lambda, mu)));
            }
            let expected = ModVec::basis(f, g, *s);
            (sum != expected).then(|| format!("Σ i(λ,{mu}) s_λ m = {sum}, expected {expected}"))
        })
        .collect();

    // Solve Σ t_μ m = Σ c_λ s_λ m by peeling: s_λ m has a unit coordinate
    // at the subset of λ and otherwise only reaches larger partitions.
    let mut rest = ModVec::zero(f, g);
    for (_, s) in &table {
        rest.add_scaled(&ModVec::basis(f, g, *s), &BigInt::from(1));
    }
    let mut sum_coefficients = Vec::with_capacity(cases);
    for ((lambda, s), v) in table.iter().zip(&s_vecs) {
        let c = rest.get(*s);
        rest.add_scaled(v, &-c.clone());
        sum_coefficients.push((lambda.clone(), c));
    }
    let mut sum_failures: Vec<String> = sum_coefficients
        .iter()
        .filter(|(l, c)| *c != BigInt::from(weight(l)))
        .map(|(l, c)| format!("coefficient of s_{l} m is {c}, F = {}", weight(l)))
        .collect();
    if !rest.is_zero() {
        sum_failures.push(format!("residual after peeling: {rest}"));
    }

    Ok(BasisReport {
        f,
        g,
        s_in_t: Check::from_failures(cases, s_in_t_failures),
        t_in_s: Check::from_failures(cases, t_in_s_failures),
        sum_of_t: Check::from_failures(cases, sum_failures),
        sum_coefficients,
    })
}
