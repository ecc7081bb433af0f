//! Partitions, nodes and skew shapes.
//!
//! Partitions are stored as row lengths. Everything geometric is computed on
//! demand in the rotated ("Russian") picture, where the node `(a, b)` sits at
//! height `a + b` in column `b - a`. Columns are signed.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point `(a, b)`; `a` is the row, `b` the column of the usual
/// English diagram. Nodes of partitions have `a, b >= 1`, but neighbours of
/// boundary nodes may step outside that range, so both coordinates are signed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub a: i64,
    pub b: i64,
}

impl Node {
    pub const fn new(a: i64, b: i64) -> Self {
        Node { a, b }
    }

    pub const fn height(self) -> i64 {
        self.a + self.b
    }

    pub const fn column(self) -> i64 {
        self.b - self.a
    }

    pub const fn ne(self) -> Node {
        Node::new(self.a, self.b + 1)
    }

    pub const fn nw(self) -> Node {
        Node::new(self.a + 1, self.b)
    }

    pub const fn se(self) -> Node {
        Node::new(self.a - 1, self.b)
    }

    pub const fn sw(self) -> Node {
        Node::new(self.a, self.b - 1)
    }

    pub const fn n(self) -> Node {
        Node::new(self.a + 1, self.b + 1)
    }

    pub const fn s(self) -> Node {
        Node::new(self.a - 1, self.b - 1)
    }

    /// The node of the given column at the given height, if the parities
    /// are compatible.
    pub fn at(column: i64, height: i64) -> Option<Node> {
        if (height - column).rem_euclid(2) != 0 {
            return None;
        }
        Some(Node::new((height - column) / 2, (height + column) / 2))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// What a partition looks like at the top of one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnKind {
    Addable(Node),
    Removable(Node),
    Neither,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(f^g)`.
    pub fn rectangle(f: usize, g: usize) -> Self {
        if f == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![f; g] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `a`-th part, 1-indexed, reading missing parts as zero.
    pub fn part(&self, a: i64) -> usize {
        if a < 1 {
            return usize::MAX;
        }
        self.parts.get(a as usize - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `λ ⊇ μ`, comparing parts pointwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    pub fn has_node(&self, n: Node) -> bool {
        n.a >= 1 && n.b >= 1 && self.part(n.a) as i64 >= n.b
    }

    /// All nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p as i64).map(move |b| Node::new(r as i64 + 1, b)))
    }

    pub fn fits_box(&self, f: usize, g: usize) -> bool {
        self.first_part() <= f && self.len() <= g
    }

    /// Columns that can contain nodes of this partition.
    pub fn column_span(&self) -> std::ops::RangeInclusive<i64> {
        (1 - self.len() as i64)..=(self.first_part() as i64 - 1)
    }

    fn column_base(j: i64) -> Node {
        let a = 1.max(1 - j);
        Node::new(a, a + j)
    }

    /// Nodes of the partition in column `j`, lowest first.
    pub fn column_nodes(&self, j: i64) -> Vec<Node> {
        let mut out = Vec::new();
        let mut n = Self::column_base(j);
        while self.has_node(n) {
            out.push(n);
            n = n.n();
        }
        out
    }

    /// Highest node in column `j`.
    pub fn column_top(&self, j: i64) -> Option<Node> {
        self.column_nodes(j).last().copied()
    }

    pub fn is_addable(&self, n: Node) -> bool {
        n.a >= 1
            && n.b >= 1
            && self.part(n.a) as i64 == n.b - 1
            && (n.a == 1 || self.part(n.a - 1) as i64 >= n.b)
    }

    pub fn is_removable(&self, n: Node) -> bool {
        self.has_node(n) && !self.has_node(n.nw()) && !self.has_node(n.ne())
    }

    pub fn column_kind(&self, j: i64) -> ColumnKind {
        let above = match self.column_top(j) {
            Some(top) if self.is_removable(top) => return ColumnKind::Removable(top),
            Some(top) => top.n(),
            None => Self::column_base(j),
        };
        if self.is_addable(above) {
            ColumnKind::Addable(above)
        } else {
            ColumnKind::Neither
        }
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out: Vec<Node> = (0..=self.len() as i64)
            .map(|r| Node::new(r + 1, self.part(r + 1) as i64 + 1))
            .filter(|&n| self.is_addable(n))
            .collect();
        out.sort_by_key(|n| n.column());
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out: Vec<Node> = (1..=self.len() as i64)
            .map(|r| Node::new(r, self.part(r) as i64))
            .filter(|&n| self.is_removable(n))
            .collect();
        out.sort_by_key(|n| n.column());
        out
    }

    pub fn add_node(&self, n: Node) -> Result<Partition> {
        if !self.is_addable(n) {
            return Err(Error::Internal(format!("{n} is not addable to {self}")));
        }
        let mut parts = self.parts.clone();
        if n.a as usize > parts.len() {
            parts.push(1);
        } else {
            parts[n.a as usize - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_node(&self, n: Node) -> Result<Partition> {
        if !self.is_removable(n) {
            return Err(Error::Internal(format!("{n} is not removable from {self}")));
        }
        let mut parts = self.parts.clone();
        parts[n.a as usize - 1] -= 1;
        Partition::new(parts)
    }

    /// Drops the first `a` rows.
    pub fn drop_rows(&self, a: usize) -> Partition {
        Partition {
            parts: self.parts.iter().skip(a).copied().collect(),
        }
    }

    /// Subtracts `b` from every part, discarding what goes non-positive.
    pub fn drop_columns(&self, b: usize) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > b)
                .map(|p| p - b)
                .collect(),
        }
    }

    /// Removes an arbitrary set of nodes, checking the result is a partition.
    pub(crate) fn without_nodes(&self, nodes: &[Node]) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for n in nodes {
            if !self.has_node(*n) {
                return Err(Error::Internal(format!("{n} is not a node of {self}")));
            }
            parts[n.a as usize - 1] -= 1;
        }
        let out = Partition::new(parts)?;
        if out.size() + nodes.len() != self.size() || !self.contains(&out) {
            return Err(Error::Internal(format!("removing {nodes:?} from {self}")));
        }
        Ok(out)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let t = s.trim();
        let inner = match (t.strip_prefix('('), t.strip_suffix(')')) {
            (Some(_), Some(_)) => &t[1..t.len() - 1],
            (None, None) => t,
            _ => return Err(err()),
        };
        if inner.trim().is_empty() || inner.trim() == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the tests and examples.
///
/// Panics if the parts are not weakly decreasing.
pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing parts")
}

/// `λ ⊇ μ`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

/// Classifies column `j` of `λ`.
pub fn addable_removable(lambda: &Partition, j: i64) -> ColumnKind {
    lambda.column_kind(j)
}

/// The set `X(λ)` relative to the addable node of `λ` in a fixed column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripSet {
    pub column: i64,
    pub addable: Node,
    /// Sorted, never contains zero.
    pub values: Vec<i64>,
}

impl StripSet {
    pub fn positive(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().copied().filter(|&x| x > 0)
    }

    pub fn negative(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().copied().filter(|&x| x < 0)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.values.binary_search(&x).is_ok()
    }
}

/// Computes `X(λ)` for the addable node of `λ` in column `j`.
///
/// `x` belongs to the set when column `j + x` has a removable node one below
/// the addable node and every node strictly between the two columns is lower
/// than the addable node.
pub fn x_set(lambda: &Partition, j: i64) -> Result<StripSet> {
    let addable = match lambda.column_kind(j) {
        ColumnKind::Addable(n) => n,
        _ => {
            return Err(Error::NoAddableNode {
                partition: lambda.to_string(),
                column: j,
            })
        }
    };
    let target = addable.height();
    let span = lambda.column_span();
    let mut values = Vec::new();
    for step in [-1i64, 1] {
        let mut highest_between = i64::MIN;
        let mut c = j + step;
        while span.contains(&c) && highest_between < target {
            if let Some(top) = lambda.column_top(c) {
                if top.height() == target - 1 && lambda.is_removable(top) {
                    values.push(c - j);
                }
                highest_between = highest_between.max(top.height());
            }
            c += step;
        }
    }
    values.sort_unstable();
    Ok(StripSet {
        column: j,
        addable,
        values,
    })
}

/// `λ^[x]`: removes the highest node of every column between `j` and
/// `j + x` (exclusive of `j`).
pub fn strip_remove(lambda: &Partition, j: i64, x: i64) -> Result<Partition> {
    let set = x_set(lambda, j)?;
    if !set.contains(x) {
        return Err(Error::NotInStripSet {
            partition: lambda.to_string(),
            column: j,
            x,
        });
    }
    let columns = if x > 0 {
        (j + 1)..=(j + x)
    } else {
        (j + x)..=(j - 1)
    };
    let strip = columns
        .map(|c| {
            lambda
                .column_top(c)
                .ok_or_else(|| Error::Internal(format!("column {c} of {lambda} is empty")))
        })
        .collect::<Result<Vec<_>>>()?;
    lambda.without_nodes(&strip)
}

/// All partitions fitting in the `f × g` box (at most `g` parts, each at
/// most `f`), ordered by size and then by decreasing parts.
pub fn box_partitions(f: usize, g: usize) -> Vec<Partition> {
    fn go(max_part: usize, rows_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            prefix.push(p);
            go(p, rows_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(f, g, &mut Vec::new(), &mut out);
    out.sort_by(|x, y| (x.size(), Reverse(&x.parts)).cmp(&(y.size(), Reverse(&y.parts))));
    out
}

/// All partitions of `n`, by decreasing parts.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(left: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=max_part.min(left)).rev() {
            prefix.push(part);
            go(left - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `λ`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    box_partitions(lambda.first_part(), lambda.len())
        .into_iter()
        .filter(|m| lambda.contains(m))
        .collect()
}

/// A skew Young diagram `λ ∖ μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    cells: BTreeSet<Node>,
    columns: BTreeMap<i64, Vec<Node>>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        let cells: BTreeSet<Node> = outer.nodes().filter(|&n| !inner.has_node(n)).collect();
        let mut columns: BTreeMap<i64, Vec<Node>> = BTreeMap::new();
        for &n in &cells {
            columns.entry(n.column()).or_default().push(n);
        }
        for nodes in columns.values_mut() {
            nodes.sort_by_key(|n| n.height());
        }
        Ok(SkewShape {
            outer,
            inner,
            cells,
            columns,
        })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> &BTreeSet<Node> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, n: Node) -> bool {
        self.cells.contains(&n)
    }

    /// Nodes of column `j`, lowest first.
    pub fn column(&self, j: i64) -> &[Node] {
        self.columns.get(&j).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Non-empty columns in increasing order.
    pub fn columns(&self) -> impl Iterator<Item = (i64, &[Node])> {
        self.columns.iter().map(|(&j, v)| (j, v.as_slice()))
    }

    pub fn min_column(&self) -> Option<i64> {
        self.columns.keys().next().copied()
    }

    pub fn max_column(&self) -> Option<i64> {
        self.columns.keys().next_back().copied()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.outer, self.inner)
    }
}
