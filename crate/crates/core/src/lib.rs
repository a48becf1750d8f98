//! Exact solvers, gadget reductions and cross-oracle verification for list
//! coloring, precoloring extension, C6 retraction and compaction, fall
//! coloring and biclique partition on bipartite graphs.

pub mod error;
pub mod exec;
pub mod graph;
pub mod hitset;
pub mod io;
pub mod oracles;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
