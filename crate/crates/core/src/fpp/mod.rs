//! First-passage percolation: exponential edge weights, shortest paths,
//! the ball-growth exploration, weighted diameters and metric-graph
//! diameters.
//!
//! `f64::INFINITY` is the unreachable sentinel everywhere.

mod diameter;
mod exploration;
mod metric;
mod sssp;

use std::io::{BufRead, Write};

use rand::distr::Open01;
use rand::Rng;

pub use diameter::{
    fpp_diameters, metric_diameter, weighted_diameter, DiameterMode, MetricDiameter,
    WeightedDiameter, DEFAULT_METRIC_EXACT_CAP,
};
pub use exploration::{
    count_good_vertices, diameter_path_edge_count, exploration, exploration_with_limit,
    ExplorationRecord,
};
pub use metric::metric_pair_max;
pub use sssp::{shortest_path_tree, sssp, Dijkstra};

use crate::error::{Error, Result};
use crate::graph::io::{parse_at, read_owned_rows, Rows};
use crate::graph::MultiGraph;

/// A multigraph with one nonnegative weight per edge id.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    graph: MultiGraph,
    weights: Vec<f64>,
}

impl WeightedGraph {
    pub fn new(graph: MultiGraph, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} edges",
                weights.len(),
                graph.edge_count()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(**w >= 0.0)) {
            return Err(Error::InvalidParameter(format!("edge weight {w} is negative or NaN")));
        }
        Ok(Self { graph, weights })
    }

    /// Builds from `(u, v, w)` triples.
    pub fn from_weighted_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = MultiGraph::from_edges(n, &pairs)?;
        Self::new(graph, edges.iter().map(|e| e.2).collect())
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> f64 {
        self.weights[edge]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn max_weight(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }

    /// Header `n m`, then `u v w` with `w` at 17 significant digits.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.vertex_count(), self.edge_count())?;
        for ((u, v), w) in self.graph.edges().zip(&self.weights) {
            writeln!(out, "{u} {v} {w:.16e}")?;
        }
        Ok(())
    }

    pub fn read_edge_list<R: BufRead>(input: R) -> Result<Self> {
        let Rows { n, rows } = read_owned_rows(input, 3)?;
        let edges: Vec<(usize, usize, f64)> = rows
            .iter()
            .map(|(line, f)| {
                Ok((
                    parse_at(&f[0], *line)?,
                    parse_at(&f[1], *line)?,
                    parse_at(&f[2], *line)?,
                ))
            })
            .collect::<Result<_>>()?;
        Self::from_weighted_edges(n, &edges)
    }
}

/// I.i.d. Exponential(`rate`) weight on every edge, in edge-id order.
pub fn assign_exp_weights<R: Rng + ?Sized>(
    g: MultiGraph,
    rate: f64,
    rng: &mut R,
) -> Result<WeightedGraph> {
    if !(rate > 0.0 && rate.is_finite()) {
        return Err(Error::InvalidParameter(format!("rate = {rate} must be positive")));
    }
    let weights = (0..g.edge_count())
        .map(|_| {
            let u: f64 = rng.sample(Open01);
            -u.ln() / rate
        })
        .collect();
    WeightedGraph::new(g, weights)
}
