use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::WeightedGraph;

#[derive(Clone, Copy, Debug)]
struct Entry {
    dist: f64,
    vertex: u32,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // max-heap: smaller distance first, then smaller id
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Dijkstra with reusable scratch. Equal distances settle in increasing id
/// order, so the settle order is deterministic.
#[derive(Clone, Debug)]
pub struct Dijkstra {
    dist: Vec<f64>,
    settled: Vec<bool>,
    order: Vec<usize>,
    heap: BinaryHeap<Entry>,
}

impl Dijkstra {
    pub fn new(n: usize) -> Self {
        Self {
            dist: vec![f64::INFINITY; n],
            settled: vec![false; n],
            order: Vec::with_capacity(n),
            heap: BinaryHeap::new(),
        }
    }

    /// Full run from `source`.
    pub fn run(&mut self, g: &WeightedGraph, source: usize) -> &[f64] {
        self.run_with(g, source, None, |_, _| true)
    }

    /// Runs from `source`, skipping edge `excluded`, calling `visit(v, d)`
    /// as each vertex settles; stops early once `visit` returns false.
    /// After an early stop only settled entries are final.
    pub fn run_with(
        &mut self,
        g: &WeightedGraph,
        source: usize,
        excluded: Option<usize>,
        mut visit: impl FnMut(usize, f64) -> bool,
    ) -> &[f64] {
        let n = g.vertex_count();
        if self.dist.len() != n {
            *self = Self::new(n);
        } else {
            self.dist.fill(f64::INFINITY);
            self.settled.fill(false);
            self.order.clear();
            self.heap.clear();
        }
        let graph = g.graph();
        self.dist[source] = 0.0;
        self.heap.push(Entry {
            dist: 0.0,
            vertex: source as u32,
        });
        while let Some(Entry { dist, vertex }) = self.heap.pop() {
            let v = vertex as usize;
            if self.settled[v] {
                continue;
            }
            self.settled[v] = true;
            self.order.push(v);
            if !visit(v, dist) {
                break;
            }
            for (w, e) in graph.incident(v) {
                if Some(e) == excluded || self.settled[w] {
                    continue;
                }
                let candidate = dist + g.weight(e);
                if candidate < self.dist[w] {
                    self.dist[w] = candidate;
                    self.heap.push(Entry {
                        dist: candidate,
                        vertex: w as u32,
                    });
                }
            }
        }
        &self.dist
    }

    pub fn distances(&self) -> &[f64] {
        &self.dist
    }

    /// Vertices in the order they settled during the last run.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_settled(&self, v: usize) -> bool {
        self.settled[v]
    }
}

/// Exact single-source distances; unreachable vertices get `f64::INFINITY`.
pub fn sssp(g: &WeightedGraph, source: usize) -> Vec<f64> {
    Dijkstra::new(g.vertex_count()).run(g, source).to_vec()
}

/// Distances plus a shortest-path predecessor for every reachable vertex.
///
/// Among tight predecessors (`dist[u] + w(uv) == dist[v]`, `u` settled
/// before `v`) the smallest id wins, making paths deterministic.
pub fn shortest_path_tree(g: &WeightedGraph, source: usize) -> (Vec<f64>, Vec<Option<usize>>) {
    let mut dijkstra = Dijkstra::new(g.vertex_count());
    dijkstra.run(g, source);
    let mut rank = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in dijkstra.order().iter().enumerate() {
        rank[v] = i;
    }
    let dist = dijkstra.distances().to_vec();
    let pred = (0..g.vertex_count())
        .map(|v| {
            if v == source || rank[v] == usize::MAX {
                return None;
            }
            g.graph()
                .incident(v)
                .filter(|&(u, e)| rank[u] < rank[v] && dist[u] + g.weight(e) == dist[v])
                .map(|(u, _)| u)
                .min()
        })
        .collect();
    (dist, pred)
}
