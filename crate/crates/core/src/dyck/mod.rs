//! Dyck tiles and tilings of skew shapes.

mod conditions;
mod count;
mod enumerate;
mod qpoly;
mod render;
mod tile;

pub use conditions::{
    find_ce_tiling, has_big_tile_ending_in, has_big_tile_starting_in, is_cover_expansive,
    is_cover_expansive_by_definition, is_cover_inclusive, left_arrow, right_arrow, CiCondition,
    Side,
};
pub use count::{
    ce, ce_terms, ce_tiling, ci, ci_tilings, count_ce, count_ci, recurrence_column, CountMode,
};
pub use enumerate::{enumerate_tilings, enumerate_tilings_capped, for_each_tiling, DEFAULT_CAP};
pub use qpoly::{ce_qpoly, ci_qpoly, ci_qpoly_capped, QPoly};
pub use render::render;
pub use tile::{Tile, Tiling, TilingJson};
