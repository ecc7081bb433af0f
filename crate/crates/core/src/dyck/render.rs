//! ASCII pictures of tilings in the Russian convention.
//!
//! Each node is a diamond two characters wide and two high. Sides shared by
//! two nodes of the same tile are left blank, so the outlines that remain
//! are the tile boundaries.

use super::tile::Tiling;

pub fn render(t: &Tiling) -> String {
    let cells = t.shape().cells();
    if cells.is_empty() {
        return String::from("(empty)\n");
    }
    let left = cells.iter().map(|n| n.column()).min().unwrap();
    let right = cells.iter().map(|n| n.column()).max().unwrap();
    let top = cells.iter().map(|n| n.height()).max().unwrap();
    let bottom = cells.iter().map(|n| n.height()).min().unwrap() - 1;
    let width = (right - left + 2) as usize;
    let rows = (top - bottom + 1) as usize;
    let mut grid = vec![vec![' '; width]; rows];
    let mut put = |x: i64, y: i64, ch: char| {
        grid[(top - y) as usize][(x - left) as usize] = ch;
    };
    for &n in cells {
        let (x, y) = (n.column(), n.height());
        if !t.attached(n, n.nw()) {
            put(x, y, '/');
        }
        if !t.attached(n, n.ne()) {
            put(x + 1, y, '\\');
        }
        if !t.attached(n, n.sw()) {
            put(x, y - 1, '\\');
        }
        if !t.attached(n, n.se()) {
            put(x + 1, y - 1, '/');
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
