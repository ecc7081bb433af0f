//! Parenthesis sequences of partitions and the nesting poset of their pairs.
//!
//! Position `p ∈ ℤ` holds an open parenthesis when `p = λ_i - i` for some
//! `i ≥ 1` and a close otherwise. Far to the left everything is open and far
//! to the right everything is closed, so only the window `-ℓ(λ) .. λ₁ - 1`
//! carries information. The stored form is that window plus the fewest
//! extra opens on the left and closes on the right that balance it.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParenSeq {
    /// `true` is an open parenthesis.
    pub window: Vec<bool>,
    /// Integer position of `window[0]`.
    pub offset: i64,
    pub pad_open: usize,
    pub pad_close: usize,
    /// Matched `(open, close)` indices into the padded sequence.
    pub pairs: Vec<(usize, usize)>,
}

/// The symbol at integer position `p` of the infinite sequence of `λ`.
pub fn symbol_at(lambda: &Partition, p: i64) -> bool {
    if p < -(lambda.len() as i64) {
        return true;
    }
    (1..=lambda.len() as i64).any(|i| lambda.part(i) as i64 - i == p)
}

fn match_pairs(seq: &[bool]) -> (Vec<(usize, usize)>, Vec<usize>, Vec<usize>) {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    let mut lone_close = Vec::new();
    for (i, &open) in seq.iter().enumerate() {
        if open {
            stack.push(i);
        } else if let Some(o) = stack.pop() {
            pairs.push((o, i));
        } else {
            lone_close.push(i);
        }
    }
    pairs.sort_unstable();
    (pairs, stack, lone_close)
}

pub fn paren_sequence(lambda: &Partition) -> ParenSeq {
    let offset = -(lambda.len() as i64);
    let window: Vec<bool> = (offset..lambda.first_part() as i64)
        .map(|p| symbol_at(lambda, p))
        .collect();
    let (_, lone_open, lone_close) = match_pairs(&window);
    let pad_open = lone_close.len();
    let pad_close = lone_open.len();
    let mut seq = ParenSeq {
        window,
        offset,
        pad_open,
        pad_close,
        pairs: Vec::new(),
    };
    seq.pairs = match_pairs(&seq.padded()).0;
    seq
}

impl ParenSeq {
    pub fn padded(&self) -> Vec<bool> {
        let mut out = vec![true; self.pad_open];
        out.extend(&self.window);
        out.extend(std::iter::repeat_n(false, self.pad_close));
        out
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn window_string(&self) -> String {
        self.window
            .iter()
            .map(|&o| if o { '(' } else { ')' })
            .collect()
    }

    /// Two aligned rows: the padded sequence wrapped in `outer` extra pairs,
    /// and a pair number under every symbol. Closes are numbered from left
    /// to right and each open carries the number of its close.
    pub fn numbered(&self, outer: usize) -> String {
        let mut seq = vec![true; outer];
        seq.extend(self.padded());
        seq.extend(std::iter::repeat_n(false, outer));
        let (pairs, _, _) = match_pairs(&seq);
        let mut label = vec![0usize; seq.len()];
        let mut closes: Vec<(usize, usize)> = pairs.iter().map(|&(o, c)| (c, o)).collect();
        closes.sort_unstable();
        for (k, (c, o)) in closes.into_iter().enumerate() {
            label[c] = k + 1;
            label[o] = k + 1;
        }
        let width = seq.len().to_string().len();
        let top: Vec<String> = seq
            .iter()
            .map(|&o| format!("{:>width$}", if o { "(" } else { ")" }))
            .collect();
        let bottom: Vec<String> = label.iter().map(|l| format!("{l:>width$}")).collect();
        format!("{}\n{}\n", top.join(" "), bottom.join(" "))
    }
}

impl fmt::Display for ParenSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in self.padded() {
            write!(f, "{}", if o { '(' } else { ')' })?;
        }
        Ok(())
    }
}

/// `λ ()← μ`: the sequence of `λ` is that of `μ` with some matched pairs of
/// `μ` reversed to close…open.
pub fn chord_relation(lambda: &Partition, mu: &Partition) -> bool {
    let reach = |p: &Partition| (p.first_part() + p.len()) as i64;
    let w = reach(lambda).max(reach(mu)) + 1;
    let mu_seq: Vec<bool> = (-w..w).map(|p| symbol_at(mu, p)).collect();
    let differ: BTreeSet<usize> = (-w..w)
        .enumerate()
        .filter(|&(_, p)| symbol_at(lambda, p) != symbol_at(mu, p))
        .map(|(i, _)| i)
        .collect();
    let (pairs, _, _) = match_pairs(&mu_seq);
    let mut covered = BTreeSet::new();
    for (o, c) in pairs {
        match (differ.contains(&o), differ.contains(&c)) {
            (true, true) => {
                covered.insert(o);
                covered.insert(c);
            }
            (false, false) => {}
            _ => return false,
        }
    }
    covered == differ
}

/// The `N` largest pairs of the infinite sequence, ordered by nesting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestPoset {
    /// Pairs as `(open, close)` positions in the sequence wrapped in the
    /// extra outer pairs.
    pub pairs: Vec<(usize, usize)>,
    /// `l(p)`: one plus the number of pairs nested inside `p`.
    pub lengths: Vec<usize>,
}

impl NestPoset {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `p` is above `q` when `p` is nested inside `q`.
    pub fn above(&self, p: usize, q: usize) -> bool {
        let (po, pc) = self.pairs[p];
        let (qo, qc) = self.pairs[q];
        qo < po && pc < qc
    }

    /// `N! / Π l(p)`.
    pub fn hook_count(&self) -> BigUint {
        let n = (1..=self.len() as u64).fold(BigUint::one(), |acc, k| acc * k);
        let denom = self
            .lengths
            .iter()
            .fold(BigUint::one(), |acc, &l| acc * l as u64);
        n / denom
    }
}

/// The truncation `P_N(λ)`. `N` must be at least the number of pairs of the
/// minimal balanced form.
pub fn nesting_poset(lambda: &Partition, n: usize) -> Result<NestPoset> {
    let seq = paren_sequence(lambda);
    let inner = seq.pair_count();
    if n < inner {
        return Err(Error::TruncationTooSmall {
            requested: n,
            minimum: inner,
        });
    }
    let outer = n - inner;
    let mut full = vec![true; outer];
    full.extend(seq.padded());
    full.extend(std::iter::repeat_n(false, outer));
    let (pairs, _, _) = match_pairs(&full);
    let lengths = pairs.iter().map(|&(o, c)| (c - o).div_ceil(2)).collect();
    Ok(NestPoset { pairs, lengths })
}

/// `F(λ)` as the number of linear extensions of `P_N(λ)` for large `N`.
///
/// Evaluated at the smallest `N` that leaves one pair around the whole
/// balanced form, and checked to agree at the next two sizes.
pub fn hook_formula_f(lambda: &Partition) -> Result<BigUint> {
    let start = paren_sequence(lambda).pair_count() + 1;
    let value = nesting_poset(lambda, start)?.hook_count();
    for n in start + 1..=start + 2 {
        let next = nesting_poset(lambda, n)?.hook_count();
        if next != value {
            return Err(Error::Internal(format!(
                "hook count for {lambda} changes from {value} to {next} at N={n}"
            )));
        }
    }
    Ok(value)
}
