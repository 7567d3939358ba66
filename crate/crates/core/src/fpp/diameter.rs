use rand::seq::index::sample;
use rayon::prelude::*;

use super::metric::{pair_max_unchecked, segment_far};
use super::sssp::Dijkstra;
use super::WeightedGraph;
use crate::error::{Error, Result};
use crate::rng::stream;

/// Default largest vertex count for an exact metric diameter.
pub const DEFAULT_METRIC_EXACT_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterMode {
    /// Every vertex is a source.
    Exact,
    /// `sources` random sources plus greedy farthest-vertex sweeps; the
    /// result is a lower bound.
    Sampled { sources: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedDiameter {
    pub value: f64,
    /// Endpoints with `pair.0 < pair.1` (or equal on a single vertex).
    pub pair: (usize, usize),
    /// False when the value is only a lower bound.
    pub exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricDiameter {
    pub value: f64,
    pub exact: bool,
    /// Edges whose points were examined after pruning.
    pub edges_scanned: usize,
}

#[derive(Clone, Copy, Debug)]
struct SourceStats {
    source: usize,
    ecc: f64,
    farthest: usize,
    /// Largest distance from the source to any point of the metric graph.
    metric_ecc: f64,
}

impl SourceStats {
    fn pair(&self) -> (usize, usize) {
        (self.source.min(self.farthest), self.source.max(self.farthest))
    }
}

fn source_stats(g: &WeightedGraph, dijkstra: &mut Dijkstra, source: usize) -> SourceStats {
    let dist = dijkstra.run(g, source);
    let (mut ecc, mut farthest) = (0.0, source);
    for (v, &d) in dist.iter().enumerate() {
        if d > ecc {
            ecc = d;
            farthest = v;
        }
    }
    let metric_ecc = g
        .graph()
        .edges()
        .zip(g.weights())
        .map(|((c, d), &w)| segment_far(w, dist[c], dist[d]))
        .fold(0.0, f64::max);
    SourceStats {
        source,
        ecc,
        farthest,
        metric_ecc,
    }
}

fn better(a: &SourceStats, b: &SourceStats) -> bool {
    a.ecc > b.ecc || (a.ecc == b.ecc && a.pair() < b.pair())
}

fn check(g: &WeightedGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph has no diameter".into()));
    }
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn all_sources(g: &WeightedGraph) -> Vec<SourceStats> {
    let n = g.vertex_count();
    (0..n)
        .into_par_iter()
        .map_init(|| Dijkstra::new(n), |dij, v| source_stats(g, dij, v))
        .collect()
}

fn sampled_sources(g: &WeightedGraph, sources: usize, seed: u64) -> Vec<SourceStats> {
    let n = g.vertex_count();
    let mut rng = stream(seed, 0);
    let k = sources.clamp(1, n);
    let picks: Vec<usize> = sample(&mut rng, n, k).into_iter().collect();
    let mut dij = Dijkstra::new(n);
    let mut seen = vec![false; n];
    let mut stats: Vec<SourceStats> = Vec::with_capacity(2 * k);
    for v in picks {
        seen[v] = true;
        stats.push(source_stats(g, &mut dij, v));
    }
    // greedy: keep sweeping from the farthest vertex of the best source so far
    for _ in 0..k {
        let best = stats.iter().fold(stats[0], |b, s| if better(s, &b) { *s } else { b });
        let next = if seen[best.farthest] {
            match stats.iter().map(|s| s.farthest).find(|&f| !seen[f]) {
                Some(f) => f,
                None => break,
            }
        } else {
            best.farthest
        };
        seen[next] = true;
        stats.push(source_stats(g, &mut dij, next));
    }
    stats
}

fn weighted_from(stats: &[SourceStats], exact: bool) -> WeightedDiameter {
    let best = stats
        .iter()
        .fold(stats[0], |b, s| if better(s, &b) { *s } else { b });
    WeightedDiameter {
        value: best.ecc,
        pair: best.pair(),
        exact,
    }
}

/// Weighted diameter: the largest shortest-path distance between vertices.
pub fn weighted_diameter(g: &WeightedGraph, mode: DiameterMode) -> Result<WeightedDiameter> {
    check(g)?;
    Ok(match mode {
        DiameterMode::Exact => weighted_from(&all_sources(g), true),
        DiameterMode::Sampled { sources, seed } => {
            weighted_from(&sampled_sources(g, sources, seed), false)
        }
    })
}

/// Diameter of the metric graph where each edge is a segment of its weight.
pub fn metric_diameter(
    g: &WeightedGraph,
    mode: DiameterMode,
    exact_cap: usize,
) -> Result<MetricDiameter> {
    fpp_diameters(g, mode, exact_cap).map(|(_, m)| m)
}

/// Weighted and metric diameters from one shared pass over the sources.
///
/// Exact metric mode bounds each edge by the vertex metric eccentricities of
/// its ends and only scans edges whose bound beats the best value so far.
pub fn fpp_diameters(
    g: &WeightedGraph,
    mode: DiameterMode,
    exact_cap: usize,
) -> Result<(WeightedDiameter, MetricDiameter)> {
    check(g)?;
    match mode {
        DiameterMode::Exact => {
            if g.vertex_count() > exact_cap {
                return Err(Error::ExactCapExceeded {
                    n: g.vertex_count(),
                    cap: exact_cap,
                });
            }
            let stats = all_sources(g);
            let weighted = weighted_from(&stats, true);
            let metric = exact_metric(g, &stats);
            Ok((weighted, metric))
        }
        DiameterMode::Sampled { sources, seed } => {
            let stats = sampled_sources(g, sources, seed);
            let weighted = weighted_from(&stats, false);
            let value = stats.iter().map(|s| s.metric_ecc).fold(0.0, f64::max);
            Ok((
                weighted,
                MetricDiameter {
                    value,
                    exact: false,
                    edges_scanned: 0,
                },
            ))
        }
    }
}

fn exact_metric(g: &WeightedGraph, stats: &[SourceStats]) -> MetricDiameter {
    let n = g.vertex_count();
    let graph = g.graph();
    let mut best = stats.iter().map(|s| s.metric_ecc).fold(0.0, f64::max);
    let mut order: Vec<(f64, usize)> = graph
        .edges()
        .enumerate()
        .map(|(id, (a, b))| {
            let w = g.weight(id);
            (segment_far(w, stats[a].metric_ecc, stats[b].metric_ecc), id)
        })
        .collect();
    order.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));

    let mut dij = Dijkstra::new(n);
    let mut scanned = 0;
    for &(bound, id) in &order {
        if bound <= best {
            break;
        }
        scanned += 1;
        let (a, b) = graph.edge(id);
        let w_e = g.weight(id);
        let row_a = dij.run(g, a).to_vec();
        let row_b = if a == b {
            row_a.clone()
        } else {
            dij.run(g, b).to_vec()
        };
        let detour = if a == b {
            0.0
        } else {
            let mut reached = f64::INFINITY;
            dij.run_with(g, a, Some(id), |v, d| {
                if v == b {
                    reached = d;
                    false
                } else {
                    true
                }
            });
            reached
        };
        let mut here = w_e.min(0.5 * (w_e + detour));
        for (f, ((c, d), &w_f)) in graph.edges().zip(g.weights()).enumerate() {
            if f == id {
                continue;
            }
            here = here.max(pair_max_unchecked(
                w_e, w_f, row_a[c], row_a[d], row_b[c], row_b[d],
            ));
        }
        best = best.max(here);
    }
    MetricDiameter {
        value: best,
        exact: true,
        edges_scanned: scanned,
    }
}
