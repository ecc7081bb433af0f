//! Tableaux, Garnir belts and bricks, and the Garnir elements of a row
//! permutation module.
//!
//! This module uses the English convention: row `a` grows downwards and
//! column `b` to the right. Words in the generators `ψ_1, …, ψ_{n-1}` are
//! plain data; no relation of the quiver Hecke algebra is applied to them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::dyck::ci;
use crate::error::{Error, Result};
use crate::fweight::weight;
use crate::json::{big_uint, big_uint_de};
use crate::partition::{box_partitions, Node, Partition};
use crate::permmod::{generator_word, Flavor, ModVec};

/// A filling of the diagram of `π` by `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl Tableau {
    /// Checks that the row lengths form a partition and the entries are a
    /// permutation of `1..n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::NotAPartition(rows.iter().map(Vec::len).collect()));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let seen: BTreeSet<usize> = rows.iter().flatten().copied().collect();
        if seen.len() != n || seen.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::Parse {
                what: "tableau",
                input: format!("{rows:?}"),
            });
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The entry at `(a, b)`, 1-indexed.
    pub fn entry(&self, a: usize, b: usize) -> Option<usize> {
        self.rows
            .get(a.checked_sub(1)?)?
            .get(b.checked_sub(1)?)
            .copied()
    }

    fn set(&mut self, a: usize, b: usize, x: usize) {
        self.rows[a - 1][b - 1] = x;
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_strict()
            && self
                .rows
                .windows(2)
                .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo))
    }

    /// `w` in one-line form (`w[x-1]`) with `w(t^π(n)) = t(n)` for every
    /// node `n`.
    pub fn permutation(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The residues of the nodes holding `1, 2, …, n`.
    pub fn residue_sequence(&self, e: usize, kappa: i64) -> Result<Vec<usize>> {
        let mut out = vec![0; self.size()];
        for (a, row) in self.rows.iter().enumerate() {
            for (b, &x) in row.iter().enumerate() {
                out[x - 1] = residue(Node::new(a as i64 + 1, b as i64 + 1), e, kappa)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().to_string().len();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `(b - a + κ) mod e`.
pub fn residue(node: Node, e: usize, kappa: i64) -> Result<usize> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    Ok((node.b - node.a + kappa).rem_euclid(e as i64) as usize)
}

/// `t^π`: `1..n` along the rows, top row first.
pub fn initial_tableau(pi: &Partition) -> Tableau {
    let mut next = 0;
    let rows = pi
        .parts()
        .iter()
        .map(|&len| {
            let row = (next + 1..=next + len).collect();
            next += len;
            row
        })
        .collect();
    Tableau { rows }
}

pub fn is_garnir_node(pi: &Partition, node: Node) -> bool {
    node.a >= 1 && node.b >= 1 && pi.part(node.a + 1) as i64 >= node.b
}

/// Every Garnir node of `π`, row by row.
pub fn garnir_nodes(pi: &Partition) -> Vec<Node> {
    (1..pi.len() as i64)
        .flat_map(|a| (1..=pi.part(a + 1) as i64).map(move |b| Node::new(a, b)))
        .collect()
}

fn check_node(pi: &Partition, node: Node) -> Result<()> {
    if is_garnir_node(pi, node) {
        Ok(())
    } else {
        Err(Error::NotGarnirNode {
            partition: pi.to_string(),
            a: node.a.max(0) as usize,
            b: node.b.max(0) as usize,
        })
    }
}

/// The belt of `(a, b)`: row `a+1` from column 1 to `b`, then row `a` from
/// column `b` to its end. This is the order the Garnir tableau fills it.
pub fn belt(pi: &Partition, node: Node) -> Result<Vec<Node>> {
    check_node(pi, node)?;
    let (a, b) = (node.a, node.b);
    let lower = (1..=b).map(|c| Node::new(a + 1, c));
    let upper = (b..=pi.part(a) as i64).map(|c| Node::new(a, c));
    Ok(lower.chain(upper).collect())
}

/// `t^π` with the belt entries rearranged to increase from bottom left to
/// top right.
pub fn garnir_tableau(pi: &Partition, node: Node) -> Result<Tableau> {
    let cells = belt(pi, node)?;
    let mut t = initial_tableau(pi);
    let mut values: Vec<usize> = cells
        .iter()
        .map(|n| t.entry(n.a as usize, n.b as usize).expect("belt node"))
        .collect();
    values.sort_unstable();
    for (n, x) in cells.iter().zip(values) {
        t.set(n.a as usize, n.b as usize, x);
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarnirData {
    pub pi: Partition,
    pub node: Node,
    pub e: usize,
    pub kappa: i64,
    pub belt: Vec<Node>,
    /// Row `a` bricks left to right, then row `a+1` bricks left to right.
    pub bricks: Vec<Vec<Node>>,
    pub f: usize,
    pub g: usize,
    pub k: usize,
    /// Smallest entry of a brick in the Garnir tableau; `None` when there
    /// are no bricks.
    pub d: Option<usize>,
}

pub fn brick_data(pi: &Partition, node: Node, e: usize, kappa: i64) -> Result<GarnirData> {
    let belt = belt(pi, node)?;
    let target = residue(node, e, kappa)?;
    let a = node.a;
    let el = e as i64;
    let mut bricks = Vec::new();
    for row in [a, a + 1] {
        let cols: Vec<i64> = belt.iter().filter(|n| n.a == row).map(|n| n.b).collect();
        let (lo, hi) = (cols[0], *cols.last().expect("belt row is non-empty"));
        let mut c = lo;
        while c + el - 1 <= hi {
            if residue(Node::new(row, c), e, kappa)? == target {
                bricks.push((c..c + el).map(|x| Node::new(row, x)).collect::<Vec<_>>());
                c += el;
            } else {
                c += 1;
            }
        }
    }
    let f = bricks.iter().filter(|br| br[0].a == a).count();
    let g = bricks.len() - f;
    let gt = garnir_tableau(pi, node)?;
    let d = bricks
        .iter()
        .flatten()
        .map(|n| gt.entry(n.a as usize, n.b as usize).expect("brick node"))
        .min();
    Ok(GarnirData {
        pi: pi.clone(),
        node,
        e,
        kappa,
        belt,
        bricks,
        f,
        g,
        k: f + g,
        d,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordRole {
    SigmaI,
    PsiTA,
    Assembled,
}

/// A word `ψ_{i_1} ψ_{i_2} …`, written left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PsiWord {
    pub indices: Vec<usize>,
    pub role: WordRole,
}

impl fmt::Display for PsiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        let letters: Vec<String> = self.indices.iter().map(|i| format!("ψ{i}")).collect();
        write!(f, "{}", letters.join(" "))
    }
}

/// The canonical reduced word of a permutation given in one-line form.
///
/// With `c` the Lehmer code of `w`, the word is the concatenation over
/// `i = 1, 2, …` of the descending runs `s_{i+c_i-1} … s_{i+1} s_i`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut word = Vec::new();
    for i in 0..w.len() {
        let c = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        let start = i + 1;
        word.extend((start..start + c).rev());
    }
    word
}

/// The one-line permutation of `s_{i_1} s_{i_2} …`, composed as functions
/// (the rightmost letter acts first).
pub fn word_permutation(word: &[usize], n: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).collect();
    // Left-multiplying by s_i swaps the values i and i+1.
    for &i in word.iter().rev() {
        for x in w.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    w
}

/// The number of inversions, which is the length of a reduced word.
pub fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
        .sum()
}

/// `ψ_{w_i}` for the transposition of the `i`-th and `(i+1)`-th brick
/// blocks of values.
pub fn sigma_word(data: &GarnirData, i: usize) -> Result<PsiWord> {
    if i == 0 || i >= data.k {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: data.k,
        });
    }
    let d = data.d.expect("bricks exist when k > 1");
    let e = data.e;
    let n = data.pi.size();
    let mut w: Vec<usize> = (1..=n).collect();
    for r in 0..e {
        let x = d + i * e - e + r;
        let y = d + i * e + r;
        w.swap(x - 1, y - 1);
    }
    Ok(PsiWord {
        indices: reduced_word(&w),
        role: WordRole::SigmaI,
    })
}

/// Fills the bricks with value blocks: the blocks in `upper` (1-based,
/// sorted) go to row `a`, the others to row `a+1`.
fn fill_bricks(data: &GarnirData, upper: &BTreeSet<usize>) -> Result<Tableau> {
    let mut t = garnir_tableau(&data.pi, data.node)?;
    let Some(d) = data.d else {
        return Ok(t);
    };
    let e = data.e;
    let lower: Vec<usize> = (1..=data.k).filter(|x| !upper.contains(x)).collect();
    let blocks = upper.iter().chain(&lower);
    for (brick, &block) in data.bricks.iter().zip(blocks) {
        for (r, n) in brick.iter().enumerate() {
            t.set(n.a as usize, n.b as usize, d + (block - 1) * e + r);
        }
    }
    Ok(t)
}

/// `t^A`: the Garnir tableau with its bricks reordered so that their
/// entries increase along row `a` and then row `a+1`.
pub fn brick_base_tableau(data: &GarnirData) -> Result<Tableau> {
    fill_bricks(data, &(1..=data.f).collect())
}

/// The canonical reduced word of `ψ^{t^A}`.
pub fn psi_ta_word(data: &GarnirData) -> Result<PsiWord> {
    Ok(PsiWord {
        indices: reduced_word(&brick_base_tableau(data)?.permutation()),
        role: WordRole::PsiTA,
    })
}

/// The row-strict tableau of `σ_λ ψ^{t^A}`: the block set of row `a` is the
/// subset that `t_λ` makes of `{1..f}`. The full box gives `t^A` and the
/// empty partition gives the Garnir tableau.
pub fn brick_tableau(data: &GarnirData, lambda: &Partition) -> Result<Tableau> {
    let (f, g) = (data.f, data.g);
    let word = generator_word(lambda, f, g, Flavor::T)?;
    let mut v = ModVec::generator(f, g);
    for &i in word.indices.iter().rev() {
        v = v.apply_t(i);
    }
    let (mask, _) = v.terms().next().expect("a subset");
    let upper = (0..data.k)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect();
    fill_bricks(data, &upper)
}

/// The word of `σ_λ`: one σ-word per letter of `t_λ`.
pub fn sigma_lambda_word(data: &GarnirData, lambda: &Partition) -> Result<Vec<usize>> {
    let letters = generator_word(lambda, data.f, data.g, Flavor::S)?;
    let mut out = Vec::new();
    for &i in &letters.indices {
        out.extend(sigma_word(data, i)?.indices);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarnirTerm {
    #[serde(serialize_with = "big_uint")]
    pub coeff: BigUint,
    pub lambda: Partition,
    pub tableau: Tableau,
    pub psi_word: PsiWord,
}

/// `Σ_λ F(λ) σ_λ ψ^{t^A}` over the box of the brick counts, in box order.
pub fn modified_garnir(
    pi: &Partition,
    node: Node,
    e: usize,
    kappa: i64,
) -> Result<Vec<GarnirTerm>> {
    let data = brick_data(pi, node, e, kappa)?;
    let base = psi_ta_word(&data)?;
    box_partitions(data.f, data.g)
        .into_iter()
        .map(|lambda| {
            let mut indices = sigma_lambda_word(&data, &lambda)?;
            indices.extend(&base.indices);
            Ok(GarnirTerm {
                coeff: weight(&lambda),
                tableau: brick_tableau(&data, &lambda)?,
                lambda,
                psi_word: PsiWord {
                    indices,
                    role: WordRole::Assembled,
                },
            })
        })
        .collect()
}

/// One term of `Σ_λ τ_λ ψ^{t^A}` after expanding every `τ_i = σ_i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalTerm {
    #[serde(serialize_with = "big_uint")]
    pub coeff: BigUint,
    /// The σ-indices of the product, written left to right.
    pub sigma: Vec<usize>,
    pub psi_word: PsiWord,
}

/// The unmodified Garnir element, collected as formal products of the
/// `σ_i`. Longest products first, then lexicographic.
pub fn classical_garnir(
    pi: &Partition,
    node: Node,
    e: usize,
    kappa: i64,
) -> Result<Vec<ClassicalTerm>> {
    let data = brick_data(pi, node, e, kappa)?;
    let base = psi_ta_word(&data)?;
    let mut collected: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
    for lambda in box_partitions(data.f, data.g) {
        let letters = generator_word(&lambda, data.f, data.g, Flavor::T)?.indices;
        for mask in 0u64..1 << letters.len() {
            let picked: Vec<usize> = (0..letters.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| letters[b])
                .collect();
            *collected.entry(picked).or_default() += 1u32;
        }
    }
    let mut keys: Vec<Vec<usize>> = collected.keys().cloned().collect();
    keys.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    keys.into_iter()
        .map(|sigma| {
            let mut indices = Vec::new();
            for &i in &sigma {
                indices.extend(sigma_word(&data, i)?.indices);
            }
            indices.extend(&base.indices);
            Ok(ClassicalTerm {
                coeff: collected[&sigma].clone(),
                sigma,
                psi_word: PsiWord {
                    indices,
                    role: WordRole::Assembled,
                },
            })
        })
        .collect()
}

/// The coefficients of `τ_μ ψ^{t^A} m^π` in the σ-basis: `λ ↦ i(λ, μ)`,
/// zeros omitted.
pub fn expand_tau(mu: &Partition, f: usize, g: usize) -> Result<BTreeMap<Partition, BigUint>> {
    if !mu.fits_box(f, g) {
        return Err(Error::BoxMismatch {
            partition: mu.to_string(),
            f,
            g,
        });
    }
    Ok(box_partitions(f, g)
        .into_iter()
        .filter(|l| l.contains(mu))
        .map(|l| {
            let c = ci(&l, mu);
            (l, c)
        })
        .filter(|(_, c)| *c >= BigUint::one())
        .collect())
}

/// The machine-readable form of a modified Garnir relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub pi: Partition,
    pub node: [usize; 2],
    pub e: usize,
    pub kappa: i64,
    pub terms: Vec<RelationTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTermJson {
    #[serde(serialize_with = "big_uint", deserialize_with = "big_uint_de")]
    pub coeff: BigUint,
    pub lambda: Partition,
    pub tableau: Tableau,
    pub psi_word: Vec<usize>,
}

pub fn relation_json(pi: &Partition, node: Node, e: usize, kappa: i64) -> Result<RelationJson> {
    let terms = modified_garnir(pi, node, e, kappa)?;
    Ok(RelationJson {
        pi: pi.clone(),
        node: [node.a as usize, node.b as usize],
        e,
        kappa,
        terms: terms
            .into_iter()
            .map(|t| RelationTermJson {
                coeff: t.coeff,
                lambda: t.lambda,
                tableau: t.tableau,
                psi_word: t.psi_word.indices,
            })
            .collect(),
    })
}
