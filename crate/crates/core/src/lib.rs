//! Supercritical giant components two ways, first-passage percolation on
//! random regular multigraphs, and exact diameters of graphs, weighted graphs
//! and metric graphs.
//!
//! Logarithms are natural throughout.

pub mod diameter;
pub mod error;
pub mod fpp;
pub mod graph;
pub mod rng;
pub mod samplers;

pub use error::{Error, Result};
pub use graph::{MultiGraph, Subgraph};
