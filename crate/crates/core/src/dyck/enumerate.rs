use crate::error::{Error, Result};
use crate::partition::{Node, SkewShape};

use super::tile::{Tile, Tiling};

/// Default limit on the number of cells for exhaustive enumeration.
pub const DEFAULT_CAP: usize = 24;

/// A tile under construction: its nodes so far and the height it must
/// return to.
#[derive(Clone)]
struct Open {
    nodes: Vec<Node>,
    top: i64,
}

impl Open {
    fn last(&self) -> Node {
        self.nodes[self.nodes.len() - 1]
    }
}

struct Walker<F> {
    columns: Vec<Vec<Node>>,
    visit: F,
    count: usize,
}

impl<F: FnMut(Vec<Tile>)> Walker<F> {
    /// Processes column index `ci` given the tiles still open from the
    /// previous column.
    fn column(&mut self, ci: usize, open: Vec<Open>, done: &mut Vec<Tile>) {
        if ci == self.columns.len() {
            if open.is_empty() {
                self.count += 1;
                (self.visit)(done.clone());
            }
            return;
        }
        let mut next = Vec::with_capacity(open.len() + 2);
        self.extend(ci, &open, 0, 0, &mut next, done);
    }

    fn extend(
        &mut self,
        ci: usize,
        open: &[Open],
        i: usize,
        used: u64,
        next: &mut Vec<Open>,
        done: &mut Vec<Tile>,
    ) {
        if i == open.len() {
            let mut next = next.clone();
            for (k, &n) in self.columns[ci].iter().enumerate() {
                if used & (1 << k) == 0 {
                    next.push(Open {
                        nodes: vec![n],
                        top: n.height(),
                    });
                }
            }
            next.sort_by_key(|o| o.last().height());
            self.column(ci + 1, next, done);
            return;
        }
        let tile = &open[i];
        let last = tile.last();

        if last.height() == tile.top {
            done.push(Tile::new(tile.nodes.clone()).expect("closed tiles are Dyck"));
            self.extend(ci, open, i + 1, used, next, done);
            done.pop();
        }
        for step in [last.ne(), last.se()] {
            if step.height() > tile.top {
                continue;
            }
            let Some(k) = self.columns[ci].iter().position(|&n| n == step) else {
                continue;
            };
            if used & (1 << k) != 0 {
                continue;
            }
            let mut grown = tile.clone();
            grown.nodes.push(step);
            next.push(grown);
            self.extend(ci, open, i + 1, used | (1 << k), next, done);
            next.pop();
        }
    }
}

/// Calls `visit` once for every Dyck tiling of `shape`, in a fixed order.
/// Returns the number of tilings visited.
pub fn for_each_tiling<F: FnMut(Tiling)>(
    shape: &SkewShape,
    cap: usize,
    mut visit: F,
) -> Result<usize> {
    if shape.len() > cap {
        return Err(Error::CapExceeded {
            cells: shape.len(),
            cap,
        });
    }
    let (Some(lo), Some(hi)) = (shape.min_column(), shape.max_column()) else {
        visit(Tiling::new(shape.clone(), Vec::new())?);
        return Ok(1);
    };
    // One empty column past the end forces every tile to close.
    let columns: Vec<Vec<Node>> = (lo..=hi + 1).map(|c| shape.column(c).to_vec()).collect();
    if columns.iter().any(|c| c.len() > 63) {
        return Err(Error::CapExceeded {
            cells: shape.len(),
            cap: 63,
        });
    }
    let mut walker = Walker {
        columns,
        visit: |tiles: Vec<Tile>| {
            visit(Tiling::new(shape.clone(), tiles).expect("enumerated tilings cover the shape"))
        },
        count: 0,
    };
    walker.column(0, Vec::new(), &mut Vec::new());
    Ok(walker.count)
}

/// All Dyck tilings of a shape with at most `cap` cells.
pub fn enumerate_tilings_capped(shape: &SkewShape, cap: usize) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(shape, cap, |t| out.push(t))?;
    Ok(out)
}

/// All Dyck tilings of a shape, under the default cap.
pub fn enumerate_tilings(shape: &SkewShape) -> Result<Vec<Tiling>> {
    enumerate_tilings_capped(shape, DEFAULT_CAP)
}
