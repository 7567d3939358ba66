//! Unweighted eccentricities and exact diameters.
//!
//! Exact diameters use iFUB: pick a central root by a four-sweep, then
//! examine BFS levels from the deepest down, stopping once no remaining
//! level can beat the best eccentricity found.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Below this vertex count `exact_diameter` runs BFS from every vertex.
pub const ALL_PAIRS_BELOW: usize = 2000;

const UNSEEN: u32 = u32::MAX;

/// BFS scratch reused across runs. Visited marks are epoch stamps, so a new
/// run costs time proportional to the component it explores.
#[derive(Clone, Debug)]
pub struct Bfs {
    stamp: Vec<u32>,
    epoch: u32,
    dist: Vec<u32>,
    parent: Vec<u32>,
    order: Vec<u32>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 0,
            dist: vec![0; n],
            parent: vec![UNSEEN; n],
            order: Vec::with_capacity(n),
        }
    }

    /// Runs from `source` and returns its eccentricity and the smallest id
    /// among the farthest vertices.
    pub fn run(&mut self, g: &MultiGraph, source: usize) -> (usize, usize) {
        if self.stamp.len() != g.vertex_count() {
            *self = Self::new(g.vertex_count());
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        self.order.clear();
        self.stamp[source] = self.epoch;
        self.dist[source] = 0;
        self.parent[source] = UNSEEN;
        self.order.push(source as u32);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head] as usize;
            head += 1;
            let next = self.dist[v] + 1;
            for w in g.neighbors(v) {
                if self.stamp[w] != self.epoch {
                    self.stamp[w] = self.epoch;
                    self.dist[w] = next;
                    self.parent[w] = v as u32;
                    self.order.push(w as u32);
                }
            }
        }
        let last = *self.order.last().expect("source is visited") as usize;
        let ecc = self.dist[last];
        let farthest = self
            .order
            .iter()
            .rev()
            .take_while(|&&v| self.dist[v as usize] == ecc)
            .map(|&v| v as usize)
            .min()
            .expect("nonempty level");
        (ecc as usize, farthest)
    }

    /// Distance from the last source, or `None` when unreached.
    pub fn distance(&self, v: usize) -> Option<usize> {
        (self.stamp[v] == self.epoch).then(|| self.dist[v] as usize)
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.distance(v) {
            Some(_) if self.parent[v] != UNSEEN => Some(self.parent[v] as usize),
            _ => None,
        }
    }

    /// Vertices reached by the last run, in visiting order.
    pub fn visited(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.order.iter().map(|&v| v as usize)
    }

    pub fn reached(&self) -> usize {
        self.order.len()
    }
}

/// Eccentricity of `u` within its component and its farthest vertex
/// (smallest id on ties).
pub fn bfs_eccentricity(g: &MultiGraph, u: usize) -> (usize, usize) {
    Bfs::new(g.vertex_count()).run(g, u)
}

/// Exact diameter with one endpoint pair attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diameter {
    pub value: usize,
    pub pair: (usize, usize),
}

impl Diameter {
    fn new(value: usize, a: usize, b: usize) -> Self {
        Self {
            value,
            pair: (a.min(b), a.max(b)),
        }
    }

    fn improve(&mut self, other: Diameter) {
        if other.value > self.value || (other.value == self.value && other.pair < self.pair) {
            *self = other;
        }
    }
}

fn check_connected(g: &MultiGraph, bfs: &mut Bfs) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph has no diameter".into()));
    }
    bfs.run(g, 0);
    if bfs.reached() != g.vertex_count() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Largest eccentricity over `seeds` sweeps, each from a uniform start to
/// its farthest vertex and then out again. Never exceeds the diameter and
/// is exact on trees.
pub fn double_sweep_bound<R: Rng + ?Sized>(
    g: &MultiGraph,
    seeds: usize,
    rng: &mut R,
) -> Result<usize> {
    let mut bfs = Bfs::new(g.vertex_count());
    check_connected(g, &mut bfs)?;
    let mut best = 0;
    for _ in 0..seeds.max(1) {
        let start = rng.random_range(0..g.vertex_count());
        let (_, far) = bfs.run(g, start);
        best = best.max(bfs.run(g, far).0);
    }
    Ok(best)
}

/// BFS from every vertex.
pub fn all_pairs_diameter(g: &MultiGraph) -> Result<Diameter> {
    let mut bfs = Bfs::new(g.vertex_count());
    check_connected(g, &mut bfs)?;
    let mut best = Diameter::new(0, 0, 0);
    for v in 0..g.vertex_count() {
        let (ecc, far) = bfs.run(g, v);
        best.improve(Diameter::new(ecc, v, far));
    }
    Ok(best)
}

/// Exact diameter; all-pairs BFS on small graphs, iFUB otherwise.
pub fn exact_diameter(g: &MultiGraph) -> Result<Diameter> {
    if g.vertex_count() < ALL_PAIRS_BELOW {
        all_pairs_diameter(g)
    } else {
        ifub_diameter(g)
    }
}

fn walk_up(bfs: &Bfs, mut v: usize, steps: usize) -> usize {
    for _ in 0..steps {
        v = bfs.parent(v).expect("on the BFS tree");
    }
    v
}

/// Exact diameter by iFUB at any size.
pub fn ifub_diameter(g: &MultiGraph) -> Result<Diameter> {
    let n = g.vertex_count();
    let mut bfs = Bfs::new(n);
    check_connected(g, &mut bfs)?;

    // four-sweep root selection
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut best = Diameter::new(0, start, start);
    let mut center = start;
    for _ in 0..2 {
        let (_, a) = bfs.run(g, center);
        let (ecc, b) = bfs.run(g, a);
        best.improve(Diameter::new(ecc, a, b));
        center = walk_up(&bfs, b, ecc / 2);
    }

    let (root_ecc, root_far) = bfs.run(g, center);
    best.improve(Diameter::new(root_ecc, center, root_far));
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); root_ecc + 1];
    for v in bfs.visited() {
        levels[bfs.distance(v).expect("reached")].push(v);
    }

    let mut level = root_ecc;
    while level >= 1 && best.value < 2 * level {
        let fringe = &levels[level];
        let found = if fringe.len() > 64 {
            fringe
                .par_iter()
                .map_init(|| Bfs::new(n), |b, &v| {
                    let (ecc, far) = b.run(g, v);
                    Diameter::new(ecc, v, far)
                })
                .reduce(
                    || Diameter::new(0, usize::MAX, usize::MAX),
                    |mut x, y| {
                        x.improve(y);
                        x
                    },
                )
        } else {
            let mut local = Diameter::new(0, usize::MAX, usize::MAX);
            for &v in fringe {
                let (ecc, far) = bfs.run(g, v);
                local.improve(Diameter::new(ecc, v, far));
            }
            local
        };
        best.improve(found);
        level -= 1;
    }
    Ok(best)
}
