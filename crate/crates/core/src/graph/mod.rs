//! Half-edge multigraphs and their structural decompositions.
//!
//! A [`MultiGraph`] stores one slot per half-edge, grouped by owning vertex,
//! plus a pairing involution `mate`. Self-loops and parallel edges are
//! ordinary citizens: a loop is two half-edges on the same vertex that are
//! mates of each other.

mod decompose;
pub mod io;
mod union_find;

pub use decompose::{
    degree_histogram, kernel_contract, largest_component, tree_excess, two_core,
    KernelDecomposition, PathPosition,
};
pub use union_find::UnionFind;

use crate::error::{Error, Result};

/// Undirected multigraph on dense vertex ids `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    /// `offsets[v]..offsets[v + 1]` are the half-edges owned by `v`.
    offsets: Vec<usize>,
    /// Vertex at the other end of each half-edge.
    targets: Vec<u32>,
    /// Pairing involution on half-edges.
    mate: Vec<usize>,
    /// Edge id of each half-edge.
    edge_of: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

/// Induced subgraph together with the parent id of every relabeled vertex.
///
/// Local vertex `i` is `parent_ids[i]` in the parent graph; ids are kept in
/// increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: MultiGraph,
    pub parent_ids: Vec<usize>,
}

impl MultiGraph {
    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, &[]).expect("no edges to validate")
    }

    /// Builds a multigraph from an edge list; `(u, u)` is a self-loop and
    /// repeated pairs are parallel edges. Edge ids follow list order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        assert!(n <= u32::MAX as usize, "vertex ids are stored as u32");
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let total = offsets[n];
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0u32; total];
        let mut mate = vec![0usize; total];
        let mut edge_of = vec![0u32; total];
        for (id, &(u, v)) in edges.iter().enumerate() {
            let hu = cursor[u];
            cursor[u] += 1;
            let hv = cursor[v];
            cursor[v] += 1;
            targets[hu] = v as u32;
            targets[hv] = u as u32;
            mate[hu] = hv;
            mate[hv] = hu;
            edge_of[hu] = id as u32;
            edge_of[hv] = id as u32;
        }
        Ok(Self {
            offsets,
            targets,
            mate,
            edge_of,
            edges: edges.iter().map(|&(u, v)| (u as u32, v as u32)).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.targets.len()
    }

    /// Degree of `v`; a self-loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn half_edges(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn mate(&self, h: usize) -> usize {
        self.mate[h]
    }

    /// Vertex at the far end of half-edge `h`.
    pub fn target(&self, h: usize) -> usize {
        self.targets[h] as usize
    }

    /// Vertex owning half-edge `h`.
    pub fn owner(&self, h: usize) -> usize {
        self.targets[self.mate[h]] as usize
    }

    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h] as usize
    }

    /// Neighbors of `v` with multiplicity (a loop shows `v` twice).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.targets[self.half_edges(v)].iter().map(|&t| t as usize)
    }

    /// `(neighbor, edge id)` for each half-edge of `v`.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.half_edges(v)
            .map(move |h| (self.targets[h] as usize, self.edge_of[h] as usize))
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        let (u, v) = self.edges[id];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Induced subgraph on `vertices` (any order, duplicates ignored).
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut parent_ids = vertices.to_vec();
        parent_ids.sort_unstable();
        parent_ids.dedup();
        const ABSENT: u32 = u32::MAX;
        let mut local = vec![ABSENT; self.vertex_count()];
        for (i, &v) in parent_ids.iter().enumerate() {
            local[v] = i as u32;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u as usize] != ABSENT && local[v as usize] != ABSENT)
            .map(|&(u, v)| (local[u as usize] as usize, local[v as usize] as usize))
            .collect();
        let graph = Self::from_edges(parent_ids.len(), &edges).expect("local ids are in range");
        Subgraph { graph, parent_ids }
    }

    /// Edge list with endpoints ordered and the list sorted; equal for
    /// graphs that differ only in edge order.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        out.sort_unstable();
        out
    }

    /// Returns the same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.vertex_count(), &edges).expect("permutation stays in range")
    }

    /// True if every vertex is reachable from vertex 0 (empty graph counts).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}
