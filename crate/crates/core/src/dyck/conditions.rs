//! Predicates on tilings: the nine equivalent cover-inclusive conditions,
//! the two cover-expansive sides, and the greedy cover-expansive builder.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{Node, SkewShape};

use super::tile::{Tile, Tiling};

/// The nine equivalent formulations of cover-inclusiveness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CiCondition {
    CoverInclusive,
    DepthMonotone,
    TranslateContained,
    NorthWestAttachment,
    EndNode,
    RightCoverInclusive,
    NorthEastAttachment,
    StartNode,
    LeftCoverInclusive,
}

impl CiCondition {
    pub const ALL: [CiCondition; 9] = [
        CiCondition::CoverInclusive,
        CiCondition::DepthMonotone,
        CiCondition::TranslateContained,
        CiCondition::NorthWestAttachment,
        CiCondition::EndNode,
        CiCondition::RightCoverInclusive,
        CiCondition::NorthEastAttachment,
        CiCondition::StartNode,
        CiCondition::LeftCoverInclusive,
    ];

    /// Condition by its 1-based position in the list above.
    pub fn from_index(i: usize) -> Option<CiCondition> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap() + 1
    }
}

impl fmt::Display for CiCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CiCondition::CoverInclusive => "cover-inclusive",
            CiCondition::DepthMonotone => "depth-monotone",
            CiCondition::TranslateContained => "translate-contained",
            CiCondition::NorthWestAttachment => "NW-attachment",
            CiCondition::EndNode => "end-node",
            CiCondition::RightCoverInclusive => "right-cover-inclusive",
            CiCondition::NorthEastAttachment => "NE-attachment",
            CiCondition::StartNode => "start-node",
            CiCondition::LeftCoverInclusive => "left-cover-inclusive",
        };
        write!(f, "{}:{name}", self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Both,
}

/// Pairs `(a, N a)` with both nodes in the shape.
fn covered_pairs(t: &Tiling) -> impl Iterator<Item = (Node, Node)> + '_ {
    t.shape()
        .cells()
        .iter()
        .map(|&a| (a, a.n()))
        .filter(move |&(_, up)| t.contains(up))
}

fn left_ci(t: &Tiling) -> bool {
    covered_pairs(t).all(|(a, up)| t.tile_of(up).start_column() <= t.tile_of(a).start_column())
}

fn right_ci(t: &Tiling) -> bool {
    covered_pairs(t).all(|(a, up)| t.tile_of(up).end_column() >= t.tile_of(a).end_column())
}

fn translate_contained(t: &Tiling, a: Node, up: Node) -> bool {
    let above = t.tile_of(up);
    t.tile_of(a).nodes().iter().all(|&n| above.contains(n.n()))
}

pub fn is_cover_inclusive(t: &Tiling, condition: CiCondition) -> bool {
    use CiCondition::*;
    match condition {
        CoverInclusive => left_ci(t) && right_ci(t),
        DepthMonotone => covered_pairs(t).all(|(a, up)| t.depth(up) >= t.depth(a)),
        TranslateContained => covered_pairs(t).all(|(a, up)| translate_contained(t, a, up)),
        NorthWestAttachment => {
            covered_pairs(t).all(|(a, up)| !t.attached(a, a.nw()) || t.attached(up, up.nw()))
        }
        EndNode => covered_pairs(t).all(|(a, up)| !t.is_end(up) || t.is_end(a)),
        RightCoverInclusive => right_ci(t),
        NorthEastAttachment => {
            covered_pairs(t).all(|(a, up)| !t.attached(a, a.ne()) || t.attached(up, up.ne()))
        }
        StartNode => covered_pairs(t).all(|(a, up)| !t.is_start(up) || t.is_start(a)),
        LeftCoverInclusive => left_ci(t),
    }
}

/// Cover-expansiveness via the tile-boundary criteria: no tile starts with
/// its NW neighbour in the shape (left), none ends with its NE neighbour in
/// the shape (right).
pub fn is_cover_expansive(t: &Tiling, side: Side) -> bool {
    let left = || t.tiles().iter().all(|tile| !t.contains(tile.start().nw()));
    let right = || t.tiles().iter().all(|tile| !t.contains(tile.end().ne()));
    match side {
        Side::Left => left(),
        Side::Right => right(),
        Side::Both => left() && right(),
    }
}

/// Cover-expansiveness straight from the covering definition.
pub fn is_cover_expansive_by_definition(t: &Tiling, side: Side) -> bool {
    let cells = t.shape().cells();
    let left = || {
        cells
            .iter()
            .filter(|a| t.contains(a.se()))
            .all(|&a| t.tile_of(a.se()).start_column() <= t.tile_of(a).start_column())
    };
    let right = || {
        cells
            .iter()
            .filter(|a| t.contains(a.sw()))
            .all(|&a| t.tile_of(a.sw()).end_column() >= t.tile_of(a).end_column())
    };
    match side {
        Side::Left => left(),
        Side::Right => right(),
        Side::Both => left() && right(),
    }
}

/// The unique cover-expansive tiling of a shape, if one exists.
///
/// Repeatedly takes the leftmost remaining node `a`, extends right while
/// each column still has a node no higher than `a`, and peels off the
/// lowest nodes of those columns as one tile.
pub fn find_ce_tiling(shape: &SkewShape) -> Option<Tiling> {
    let mut left: BTreeSet<(i64, i64)> = shape
        .cells()
        .iter()
        .map(|n| (n.column(), n.height()))
        .collect();
    let mut tiles = Vec::new();
    while let Some(&(col, ht)) = left.iter().next() {
        let mut nodes = Vec::new();
        let mut c = col;
        loop {
            let lowest = left.range((c, i64::MIN)..=(c, i64::MAX)).next().copied();
            match lowest {
                Some((_, h)) if h <= ht => nodes.push((c, h)),
                _ => break,
            }
            c += 1;
        }
        for key in &nodes {
            left.remove(key);
        }
        let nodes = nodes
            .into_iter()
            .map(|(c, h)| Node::at(c, h).expect("lattice node"))
            .collect();
        tiles.push(Tile::new(nodes).ok()?);
    }
    let tiling = Tiling::new(shape.clone(), tiles).ok()?;
    is_cover_expansive(&tiling, Side::Both).then_some(tiling)
}

/// Size of the highest tile starting in column `j + 1`.
pub fn right_arrow(t: &Tiling, j: i64) -> Option<usize> {
    t.tiles()
        .iter()
        .filter(|tile| tile.start_column() == j + 1)
        .max_by_key(|tile| tile.height())
        .map(Tile::len)
}

/// Size of the highest tile ending in column `j - 1`.
pub fn left_arrow(t: &Tiling, j: i64) -> Option<usize> {
    t.tiles()
        .iter()
        .filter(|tile| tile.end_column() == j - 1)
        .max_by_key(|tile| tile.height())
        .map(Tile::len)
}

pub fn has_big_tile_starting_in(t: &Tiling, j: i64) -> bool {
    t.tiles()
        .iter()
        .any(|tile| tile.is_big() && tile.start_column() == j)
}

pub fn has_big_tile_ending_in(t: &Tiling, j: i64) -> bool {
    t.tiles()
        .iter()
        .any(|tile| tile.is_big() && tile.end_column() == j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate::enumerate_tilings;
    use crate::partition::partition;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(partition(outer), partition(inner)).unwrap()
    }

    #[test]
    fn condition_indexing() {
        for (i, c) in CiCondition::ALL.iter().enumerate() {
            assert_eq!(CiCondition::from_index(i + 1), Some(*c));
            assert_eq!(c.index(), i + 1);
        }
        assert_eq!(CiCondition::from_index(0), None);
        assert_eq!(CiCondition::from_index(10), None);
    }

    #[test]
    fn one_row_is_left_but_not_right() {
        let t = &enumerate_tilings(&shape(&[2], &[])).unwrap()[0];
        assert!(is_cover_expansive(t, Side::Left));
        assert!(!is_cover_expansive(t, Side::Right));
        assert!(!is_cover_expansive(t, Side::Both));
        assert!(find_ce_tiling(&shape(&[2], &[])).is_none());
    }

    #[test]
    fn single_node() {
        let s = shape(&[1], &[]);
        let t = Tiling::singletons(s.clone());
        assert!(is_cover_expansive(&t, Side::Both));
        for c in CiCondition::ALL {
            assert!(is_cover_inclusive(&t, c));
        }
        assert_eq!(find_ce_tiling(&s), Some(t));
    }

    #[test]
    fn hook_ce_tiling_is_one_tile() {
        let t = find_ce_tiling(&shape(&[2, 1], &[])).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(find_ce_tiling(&shape(&[], &[])).map(|t| t.len()), Some(0));
    }

    #[test]
    fn arrows() {
        let s = shape(&[2, 1], &[]);
        let all = enumerate_tilings(&s).unwrap();
        let single = all.iter().find(|t| t.len() == 3).unwrap();
        assert_eq!(right_arrow(single, 0), Some(1));
        assert_eq!(left_arrow(single, 0), Some(1));
        let big = all.iter().find(|t| t.len() == 1).unwrap();
        assert_eq!(right_arrow(big, 0), None);
        assert!(has_big_tile_starting_in(big, -1));
        assert!(has_big_tile_ending_in(big, 1));
    }
}
