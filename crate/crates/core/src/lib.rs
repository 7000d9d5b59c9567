//! Exact edge-coloring analysis of loopless multigraphs.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod scan;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{BasicInvariants, Multigraph, Pair, SimpleGraphView};
