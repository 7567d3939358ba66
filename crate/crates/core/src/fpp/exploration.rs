use serde::Serialize;

use super::sssp::{shortest_path_tree, Dijkstra};
use super::WeightedGraph;
use crate::error::{Error, Result};

/// Trace of the first-passage ball growing around `source`.
///
/// Step `i` (from 0) adds one vertex at time `tau[i]`; the ball then holds
/// `ball_size[i] = i + 2` vertices and its induced subgraph has tree excess
/// `excess[i]`. Equal distances enter in increasing id order, so `tau` is
/// nondecreasing and strictly increasing for continuous weights.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExplorationRecord {
    pub source: usize,
    pub tau: Vec<f64>,
    pub ball_size: Vec<usize>,
    pub excess: Vec<usize>,
    pub q: usize,
    /// First time the ball holds `q` vertices; infinite if never.
    pub t_q: f64,
    /// The component ran out before `q` vertices.
    pub truncated: bool,
}

/// Grows the ball until it holds `q` vertices.
pub fn exploration(g: &WeightedGraph, source: usize, q: usize) -> Result<ExplorationRecord> {
    exploration_with_limit(g, source, q, q.saturating_sub(1))
}

/// Grows the ball for at least `steps` steps, and further until it holds
/// `q` vertices.
pub fn exploration_with_limit(
    g: &WeightedGraph,
    source: usize,
    q: usize,
    steps: usize,
) -> Result<ExplorationRecord> {
    let n = g.vertex_count();
    if source >= n {
        return Err(Error::VertexOutOfRange { vertex: source, n });
    }
    if q > n {
        return Err(Error::InvalidParameter(format!("q = {q} exceeds vertex count {n}")));
    }
    let wanted = steps.max(q.saturating_sub(1));
    let graph = g.graph();
    let mut in_ball = vec![false; n];
    let mut inner_edges = 0usize;
    let mut rec = ExplorationRecord {
        source,
        tau: Vec::new(),
        ball_size: Vec::new(),
        excess: Vec::new(),
        q,
        t_q: if q <= 1 { 0.0 } else { f64::INFINITY },
        truncated: false,
    };
    let mut dij = Dijkstra::new(n);
    dij.run_with(g, source, None, |v, d| {
        let mut loop_ends = 0;
        for (u, _) in graph.incident(v) {
            if u == v {
                loop_ends += 1;
            } else if in_ball[u] {
                inner_edges += 1;
            }
        }
        inner_edges += loop_ends / 2;
        in_ball[v] = true;
        if v == source {
            return wanted > 0;
        }
        let size = rec.tau.len() + 2;
        rec.tau.push(d);
        rec.ball_size.push(size);
        rec.excess.push(inner_edges + 1 - size);
        if size == q {
            rec.t_q = d;
        }
        rec.tau.len() < wanted
    });
    rec.truncated = q > 1 && rec.t_q.is_infinite();
    Ok(rec)
}

/// Edge count of the tie-broken shortest path from `u` to `v`.
pub fn diameter_path_edge_count(g: &WeightedGraph, u: usize, v: usize) -> Result<usize> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let (dist, pred) = shortest_path_tree(g, u);
    if dist[v].is_infinite() {
        return Err(Error::Unreachable { from: u, target: v });
    }
    let mut count = 0;
    let mut at = v;
    while let Some(p) = pred[at] {
        at = p;
        count += 1;
    }
    Ok(count)
}

/// Vertices whose incident edges all weigh more than `threshold`.
pub fn count_good_vertices(g: &WeightedGraph, threshold: f64) -> Result<usize> {
    let graph = g.graph();
    let expected = if graph.vertex_count() == 0 { 0 } else { graph.degree(0) };
    if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) != expected) {
        return Err(Error::NotRegular {
            vertex: v,
            degree: graph.degree(v),
            expected,
        });
    }
    Ok((0..graph.vertex_count())
        .filter(|&v| graph.incident(v).all(|(_, e)| g.weight(e) > threshold))
        .count())
}
