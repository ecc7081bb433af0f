use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Node, Partition, SkewShape};

/// A Dyck tile: a NE/SE path of nodes, highest at both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    /// Left to right, one node per column.
    nodes: Vec<Node>,
}

impl Tile {
    pub fn new(mut nodes: Vec<Node>) -> Result<Tile> {
        if nodes.is_empty() {
            return Err(Error::InvalidTiling("empty tile".into()));
        }
        nodes.sort_by_key(|n| n.column());
        for w in nodes.windows(2) {
            if w[1] != w[0].ne() && w[1] != w[0].se() {
                return Err(Error::InvalidTiling(format!(
                    "{} and {} are not NE/SE neighbours",
                    w[0], w[1]
                )));
            }
        }
        let top = nodes[0].height();
        if nodes.last().map(|n| n.height()) != Some(top) || nodes.iter().any(|n| n.height() > top) {
            return Err(Error::InvalidTiling(format!(
                "tile {nodes:?} is not a Dyck path"
            )));
        }
        Ok(Tile { nodes })
    }

    pub fn singleton(n: Node) -> Tile {
        Tile { nodes: vec![n] }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn start(&self) -> Node {
        self.nodes[0]
    }

    pub fn end(&self) -> Node {
        self.nodes[self.nodes.len() - 1]
    }

    pub fn height(&self) -> i64 {
        self.start().height()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_big(&self) -> bool {
        self.nodes.len() > 1
    }

    pub fn start_column(&self) -> i64 {
        self.start().column()
    }

    pub fn end_column(&self) -> i64 {
        self.end().column()
    }

    pub fn node_in_column(&self, c: i64) -> Option<Node> {
        let offset = c - self.start_column();
        if offset < 0 {
            return None;
        }
        self.nodes.get(offset as usize).copied()
    }

    pub fn contains(&self, n: Node) -> bool {
        self.node_in_column(n.column()) == Some(n)
    }

    /// Tile height minus node height, for nodes of the tile.
    pub fn depth(&self, n: Node) -> Option<i64> {
        self.contains(n).then(|| self.height() - n.height())
    }

    pub fn shifted(&self, da: i64, db: i64) -> Tile {
        Tile {
            nodes: self
                .nodes
                .iter()
                .map(|n| Node::new(n.a + da, n.b + db))
                .collect(),
        }
    }
}

/// A partition of a skew shape into Dyck tiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    shape: SkewShape,
    /// Sorted by start node.
    tiles: Vec<Tile>,
    owner: HashMap<Node, usize>,
}

impl Tiling {
    pub fn new(shape: SkewShape, mut tiles: Vec<Tile>) -> Result<Tiling> {
        tiles.sort_by_key(|t| (t.start_column(), t.height()));
        let mut owner = HashMap::with_capacity(shape.len());
        for (i, t) in tiles.iter().enumerate() {
            for &n in t.nodes() {
                if !shape.contains(n) {
                    return Err(Error::InvalidTiling(format!("{n} is outside {shape}")));
                }
                if owner.insert(n, i).is_some() {
                    return Err(Error::InvalidTiling(format!("{n} is covered twice")));
                }
            }
        }
        if owner.len() != shape.len() {
            return Err(Error::InvalidTiling(format!(
                "{} of {} cells covered",
                owner.len(),
                shape.len()
            )));
        }
        Ok(Tiling {
            shape,
            tiles,
            owner,
        })
    }

    /// The tiling of a shape by singletons.
    pub fn singletons(shape: SkewShape) -> Tiling {
        let tiles = shape.cells().iter().map(|&n| Tile::singleton(n)).collect();
        Tiling::new(shape, tiles).expect("singletons always tile")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn contains(&self, n: Node) -> bool {
        self.shape.contains(n)
    }

    /// The tile holding `n`. Panics if `n` is outside the shape.
    pub fn tile_of(&self, n: Node) -> &Tile {
        &self.tiles[self.owner[&n]]
    }

    pub fn try_tile_of(&self, n: Node) -> Option<&Tile> {
        self.owner.get(&n).map(|&i| &self.tiles[i])
    }

    /// True when `n` and `m` are both in the shape and share a tile.
    pub fn attached(&self, n: Node, m: Node) -> bool {
        match (self.owner.get(&n), self.owner.get(&m)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    pub fn depth(&self, n: Node) -> i64 {
        self.tile_of(n).height() - n.height()
    }

    pub fn is_start(&self, n: Node) -> bool {
        self.tile_of(n).start() == n
    }

    pub fn is_end(&self, n: Node) -> bool {
        self.tile_of(n).end() == n
    }

    pub fn big_tile_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.is_big()).count()
    }

    pub fn to_json(&self) -> TilingJson {
        TilingJson {
            outer: self.shape.outer().clone(),
            inner: self.shape.inner().clone(),
            tiles: self
                .tiles
                .iter()
                .map(|t| t.nodes().iter().map(|n| [n.a, n.b]).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &TilingJson) -> Result<Tiling> {
        let shape = SkewShape::new(json.outer.clone(), json.inner.clone())?;
        let tiles = json
            .tiles
            .iter()
            .map(|t| Tile::new(t.iter().map(|&[a, b]| Node::new(a, b)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Tiling::new(shape, tiles)
    }
}

/// Wire form of a tiling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingJson {
    pub outer: Partition,
    pub inner: Partition,
    pub tiles: Vec<Vec<[i64; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition;

    #[test]
    fn tile_shapes() {
        let t = Tile::new(vec![Node::new(2, 1), Node::new(1, 1), Node::new(1, 2)]).unwrap();
        assert_eq!(t.start(), Node::new(2, 1));
        assert_eq!(t.end(), Node::new(1, 2));
        assert_eq!(t.depth(Node::new(1, 1)), Some(1));
        assert_eq!(t.depth(Node::new(2, 2)), None);
        assert!(t.is_big());
        // Rising path is not Dyck.
        assert!(Tile::new(vec![Node::new(1, 1), Node::new(1, 2)]).is_err());
        // Gap between columns.
        assert!(Tile::new(vec![Node::new(1, 1), Node::new(1, 3)]).is_err());
    }

    #[test]
    fn tiling_checks_cover() {
        let shape = SkewShape::new(partition(&[2, 1]), Partition::empty()).unwrap();
        let three = Tile::new(shape.cells().iter().copied().collect()).unwrap();
        let t = Tiling::new(shape.clone(), vec![three.clone()]).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.attached(Node::new(1, 1), Node::new(1, 2)));
        assert!(Tiling::new(shape.clone(), vec![]).is_err());
        assert!(Tiling::new(
            shape.clone(),
            vec![three.clone(), Tile::singleton(Node::new(1, 1))]
        )
        .is_err());
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"outer":[2,1],"inner":[],"tiles":[[[2,1],[1,1],[1,2]]]}"#
        );
        let back: TilingJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Tiling::from_json(&back).unwrap(), t);
        assert_eq!(Tiling::singletons(shape).len(), 3);
    }
}
