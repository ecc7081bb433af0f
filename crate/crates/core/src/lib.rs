pub mod cli;
pub mod dyck;
mod error;
pub mod fweight;
pub mod garnir;
mod json;
pub mod paren;
pub mod partition;
pub mod permmod;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Node, Partition};
