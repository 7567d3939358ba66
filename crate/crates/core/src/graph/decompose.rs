use std::collections::{BTreeMap, VecDeque};

use super::{MultiGraph, Subgraph, UnionFind};
use crate::error::{Error, Result};

/// Largest connected component, ties broken by the smallest minimum vertex id.
///
/// An empty graph yields an empty subgraph.
pub fn largest_component(g: &MultiGraph) -> Subgraph {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for (u, v) in g.edges() {
        uf.union(u, v);
    }
    let mut best: Option<(usize, usize)> = None; // (root, size)
    for v in 0..n {
        let r = uf.find(v);
        let size = uf.set_size(r);
        if best.is_none_or(|(_, s)| size > s) {
            best = Some((r, size));
        }
    }
    let Some((root, _)) = best else {
        return g.induced(&[]);
    };
    let members: Vec<usize> = (0..n).filter(|&v| uf.find(v) == root).collect();
    g.induced(&members)
}

/// Peels vertices of degree at most one until none remain.
pub fn two_core(g: &MultiGraph) -> Subgraph {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for w in g.neighbors(v) {
            if w != v && !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    g.induced(&survivors)
}

/// Where a 2-core vertex sits relative to the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathPosition {
    /// Kernel vertex with the given kernel id.
    Kernel(usize),
    /// `offset` steps (1-based) along kernel edge `edge`, measured from the
    /// edge's first endpoint.
    Interior { edge: usize, offset: usize },
}

/// Kernel of a 2-core: maximal chains of degree-2 vertices contracted to
/// single edges.
#[derive(Clone, Debug)]
pub struct KernelDecomposition {
    pub kernel: MultiGraph,
    /// Number of 2-core edges replaced by each kernel edge.
    pub path_length: Vec<usize>,
    /// Indexed by 2-core vertex.
    pub vertex_map: Vec<PathPosition>,
    /// Kernel id to 2-core id.
    pub kernel_vertices: Vec<usize>,
}

impl KernelDecomposition {
    /// Every kernel edge as its 2-core vertex sequence, endpoints included.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut paths: Vec<Vec<usize>> = self
            .kernel
            .edges()
            .zip(&self.path_length)
            .map(|((a, _), &len)| {
                let mut p = vec![usize::MAX; len + 1];
                p[0] = self.kernel_vertices[a];
                p
            })
            .collect();
        for (v, pos) in self.vertex_map.iter().enumerate() {
            if let PathPosition::Interior { edge, offset } = *pos {
                paths[edge][offset] = v;
            }
        }
        for (path, (_, b)) in paths.iter_mut().zip(self.kernel.edges()) {
            *path.last_mut().unwrap() = self.kernel_vertices[b];
        }
        paths
    }

    /// Paths oriented so the sequence is lexicographically smaller than its
    /// reverse, then sorted; independent of edge order and orientation.
    pub fn canonical_paths(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .paths()
            .into_iter()
            .map(|p| {
                let rev: Vec<usize> = p.iter().rev().copied().collect();
                p.min(rev)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Re-expands every kernel edge into its path, in 2-core vertex ids.
    pub fn expand(&self) -> MultiGraph {
        let mut edges = Vec::with_capacity(self.path_length.iter().sum());
        for path in self.paths() {
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        }
        MultiGraph::from_edges(self.vertex_map.len(), &edges).expect("path ids are core ids")
    }

    pub fn total_path_length(&self) -> usize {
        self.path_length.iter().sum()
    }
}

/// Contracts every maximal 2-path of `core` into one kernel edge.
///
/// Requires minimum degree 2 and at least one vertex of degree ≥ 3 in each
/// component; a component that is a bare cycle is an error.
pub fn kernel_contract(core: &MultiGraph) -> Result<KernelDecomposition> {
    let n = core.vertex_count();
    const NONE: u32 = u32::MAX;
    let mut kernel_id = vec![NONE; n];
    let mut kernel_vertices = Vec::new();
    for v in 0..n {
        let degree = core.degree(v);
        if degree < 2 {
            return Err(Error::DegreeTooLow { vertex: v, degree });
        }
        if degree >= 3 {
            kernel_id[v] = kernel_vertices.len() as u32;
            kernel_vertices.push(v);
        }
    }

    let mut vertex_map: Vec<Option<PathPosition>> = vec![None; n];
    for (k, &v) in kernel_vertices.iter().enumerate() {
        vertex_map[v] = Some(PathPosition::Kernel(k));
    }
    let mut used = vec![false; core.half_edge_count()];
    let mut kernel_edges = Vec::new();
    let mut path_length = Vec::new();

    for &start in &kernel_vertices {
        for h in core.half_edges(start) {
            if used[h] {
                continue;
            }
            used[h] = true;
            let edge = kernel_edges.len();
            let mut arrived = core.mate(h);
            let mut cur = core.target(h);
            let mut len = 1;
            while kernel_id[cur] == NONE {
                vertex_map[cur] = Some(PathPosition::Interior { edge, offset: len });
                let first = core.half_edges(cur).start;
                let leave = if arrived == first { first + 1 } else { first };
                used[arrived] = true;
                used[leave] = true;
                arrived = core.mate(leave);
                cur = core.target(leave);
                len += 1;
            }
            used[arrived] = true;
            kernel_edges.push((kernel_id[start] as usize, kernel_id[cur] as usize));
            path_length.push(len);
        }
    }

    if let Some(v) = vertex_map.iter().position(Option::is_none) {
        return Err(Error::CycleComponent(v));
    }
    let kernel = MultiGraph::from_edges(kernel_vertices.len(), &kernel_edges)?;
    Ok(KernelDecomposition {
        kernel,
        path_length,
        vertex_map: vertex_map.into_iter().map(Option::unwrap).collect(),
        kernel_vertices,
    })
}

/// Edges of the subgraph induced by `set` minus `|set| − 1`.
pub fn tree_excess(g: &MultiGraph, set: &[usize]) -> Result<usize> {
    let n = g.vertex_count();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let sub = g.induced(set);
    if sub.parent_ids.is_empty() || !sub.graph.is_connected() {
        return Err(Error::DisconnectedSet);
    }
    Ok(sub.graph.edge_count() + 1 - sub.graph.vertex_count())
}

/// Degree → number of vertices with that degree.
pub fn degree_histogram(g: &MultiGraph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *hist.entry(g.degree(v)).or_insert(0) += 1;
    }
    hist
}
