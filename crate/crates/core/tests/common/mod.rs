#![allow(dead_code)]

use dyck_garnir::partition::{box_partitions, Partition, SkewShape};

pub fn p(parts: &[usize]) -> Partition {
    dyck_garnir::partition::partition(parts)
}

pub fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(p(outer), p(inner)).unwrap()
}

/// All `(λ, μ)` with `μ ⊆ λ` inside the `f × g` box.
pub fn nested_pairs(f: usize, g: usize) -> Vec<(Partition, Partition)> {
    let all = box_partitions(f, g);
    let mut out = Vec::new();
    for l in &all {
        for m in &all {
            if l.contains(m) {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}
