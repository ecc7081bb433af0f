//! The Young permutation module `M^(f,g)` over the integers.
//!
//! The module is modelled as the free abelian group on `f`-subsets of
//! `{1..k}`, `k = f + g`, with `t_i` swapping `i` and `i+1`. The cyclic
//! generator `m` is the subset `{1..f}`: it is fixed by every `t_i` with
//! `i ≠ f`, which is the defining presentation. Subsets are bit masks, with
//! element `x` at bit `x - 1`.

mod action;
mod basis;
mod matrix;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{box_partitions, Partition};

pub use action::{
    harp_check, harp_check_direct, s_action_case, s_coefficient, ActionCase, Harpoon, SAction,
    SActionCase,
};
pub use basis::{
    verify_basis_theorems, verify_basis_theorems_capped, BasisReport, Check, DEFAULT_MODULE_CAP,
};
pub use matrix::{
    matrix_n, matrix_n_q, matrix_p, matrix_p_q, IntMatrix, Matrix, MatrixEntry, PolyMatrix,
};

/// Whether the letters of a word stand for `t_i` or for `s_i = t_i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    T,
    S,
}

/// A product of generators, read left to right as written; it acts on a
/// vector starting from the rightmost letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GenWord {
    pub indices: Vec<usize>,
    pub flavor: Flavor,
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.flavor {
            Flavor::T => 't',
            Flavor::S => 's',
        };
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}{i}")?;
        }
        Ok(())
    }
}

/// The word of `t_λ` (or `s_λ`): row `r` of `λ` contributes the run
/// `λ_r + g - r + 1, …, f + g - r`.
pub fn generator_word(lambda: &Partition, f: usize, g: usize, flavor: Flavor) -> Result<GenWord> {
    if !lambda.fits_box(f, g) {
        return Err(Error::BoxMismatch {
            partition: lambda.to_string(),
            f,
            g,
        });
    }
    let mut indices = Vec::new();
    for r in 1..=g {
        let lo = lambda.part(r as i64) + g - r + 1;
        indices.extend(lo..=f + g - r);
    }
    Ok(GenWord { indices, flavor })
}

/// A vector of `M^(f,g)` in the subset basis. Zero coordinates are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVec {
    f: usize,
    g: usize,
    coords: BTreeMap<u64, BigInt>,
}

impl ModVec {
    pub fn zero(f: usize, g: usize) -> ModVec {
        ModVec {
            f,
            g,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(f: usize, g: usize, subset: u64) -> ModVec {
        let mut v = ModVec::zero(f, g);
        v.coords.insert(subset, BigInt::one());
        v
    }

    /// The generator `m`, the subset `{1..f}`.
    pub fn generator(f: usize, g: usize) -> ModVec {
        ModVec::basis(f, g, (1u64 << f) - 1)
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn k(&self) -> usize {
        self.f + self.g
    }

    pub fn get(&self, subset: u64) -> BigInt {
        self.coords.get(&subset).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coords.iter().map(|(&s, c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &ModVec, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (&s, x) in &other.coords {
            let entry = self.coords.entry(s).or_default();
            *entry += x * c;
            if entry.is_zero() {
                self.coords.remove(&s);
            }
        }
    }

    pub fn scaled(&self, c: &BigInt) -> ModVec {
        let mut out = ModVec::zero(self.f, self.g);
        out.add_scaled(self, c);
        out
    }

    fn swap(subset: u64, i: usize) -> u64 {
        let lo = (subset >> (i - 1)) & 1;
        let hi = (subset >> i) & 1;
        if lo == hi {
            subset
        } else {
            subset ^ (0b11 << (i - 1))
        }
    }

    pub fn apply_t(&self, i: usize) -> ModVec {
        let mut out = ModVec::zero(self.f, self.g);
        for (&s, c) in &self.coords {
            let entry = out.coords.entry(Self::swap(s, i)).or_default();
            *entry += c;
        }
        out.coords.retain(|_, c| !c.is_zero());
        out
    }

    pub fn apply_s(&self, i: usize) -> ModVec {
        let mut out = self.apply_t(i);
        out.add_scaled(self, &-BigInt::one());
        out
    }
}

/// Renders a subset mask as `{1,3,4}`.
pub fn subset_string(subset: u64) -> String {
    let elems: Vec<String> = (0..64)
        .filter(|b| subset >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&s, c)) in self.coords.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{}", subset_string(s))?;
        }
        Ok(())
    }
}

/// Applies a word to a vector, rightmost letter first.
pub fn act(word: &GenWord, v: &ModVec) -> Result<ModVec> {
    let k = v.k();
    let mut out = v.clone();
    for &i in word.indices.iter().rev() {
        if i == 0 || i >= k {
            return Err(Error::IndexOutOfRange { index: i, bound: k });
        }
        out = match word.flavor {
            Flavor::T => out.apply_t(i),
            Flavor::S => out.apply_s(i),
        };
    }
    Ok(out)
}

/// `t_λ·m`, which is a single subset.
pub fn t_vector(lambda: &Partition, f: usize, g: usize) -> Result<ModVec> {
    act(
        &generator_word(lambda, f, g, Flavor::T)?,
        &ModVec::generator(f, g),
    )
}

/// `s_λ·m`.
pub fn s_vector(lambda: &Partition, f: usize, g: usize) -> Result<ModVec> {
    act(
        &generator_word(lambda, f, g, Flavor::S)?,
        &ModVec::generator(f, g),
    )
}

/// The subset of `t_λ·m`.
pub fn subset_of(lambda: &Partition, f: usize, g: usize) -> Result<u64> {
    let v = t_vector(lambda, f, g)?;
    let mut terms = v.terms();
    match (terms.next(), terms.next()) {
        (Some((s, c)), None) if c.is_one() => Ok(s),
        _ => Err(Error::Internal(format!(
            "t_{lambda} m is not a basis vector: {v}"
        ))),
    }
}

/// `λ ↦ subset` over the whole box, in box order.
pub fn subset_table(f: usize, g: usize) -> Result<Vec<(Partition, u64)>> {
    box_partitions(f, g)
        .into_iter()
        .map(|l| subset_of(&l, f, g).map(|s| (l, s)))
        .collect()
}
