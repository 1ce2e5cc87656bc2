mod bits;
pub mod cli;
pub mod dgraph;
mod error;
pub mod game;
pub mod graph;
mod ground;
pub mod poset;
pub mod registry;
mod search;

pub use bits::IdSet;
pub use error::{Error, Result};
pub use ground::{Ground, Kind};
pub use search::Search;
