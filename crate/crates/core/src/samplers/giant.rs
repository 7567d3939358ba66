//! The two giant-component constructions.
//!
//! Both build a kernel multigraph, subdivide every kernel edge into a path of
//! geometric length and hang a subcritical Poisson Galton–Watson tree from
//! every vertex of the resulting 2-core. Vertex ids are laid out as kernel
//! vertices `0..N`, then path interiors edge by edge, then tree vertices, so
//! the 2-core is exactly the prefix `0..core_size`.

use std::collections::BTreeMap;
use std::io::Write;

use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::Serialize;

use super::branching::{PgwSampler, DEFAULT_TREE_CAP};
use super::configuration::sample_configuration;
use super::coupling::GeomExpCoupling;
use super::params::{conjugate_mu, normal_inverse_cdf, GiantParams};
use crate::error::{Error, Result};
use crate::graph::{io::write_edge_list, KernelDecomposition, MultiGraph, PathPosition};

const MAX_REDRAWS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GiantModel {
    /// Cubic kernel, Geometric(ε) paths, PGW(1 − ε) trees.
    Young,
    /// Poisson(Λ) kernel degrees, Geometric(1 − μ) paths, PGW(μ) trees.
    General,
}

/// Constructed giant component with its recorded structure.
#[derive(Clone, Debug)]
pub struct AnnotatedGiant {
    pub model: GiantModel,
    pub graph: MultiGraph,
    /// Always `0..core_size`.
    pub core_vertices: Vec<usize>,
    /// Always `0..N`.
    pub kernel_vertices: Vec<usize>,
    /// Kernel of the 2-core, in 2-core ids (which equal graph ids).
    pub kernel: KernelDecomposition,
    pub params: GiantParams,
    /// Trees cut off at the size cap.
    pub truncated_trees: usize,
}

#[derive(Serialize)]
struct Metadata<'a> {
    model: GiantModel,
    seed: u64,
    params: &'a GiantParams,
    vertex_count: usize,
    edge_count: usize,
    truncated_trees: usize,
    core_vertices: &'a [usize],
    kernel_vertices: &'a [usize],
    kernel_edges: Vec<(usize, usize)>,
    path_length: &'a [usize],
}

impl AnnotatedGiant {
    pub fn core_size(&self) -> usize {
        self.core_vertices.len()
    }

    pub fn kernel_size(&self) -> usize {
        self.kernel_vertices.len()
    }

    /// Edge list of the full graph (graphcore format).
    pub fn write_graph<W: Write>(&self, out: W) -> Result<()> {
        write_edge_list(&self.graph, out)
    }

    /// Sidecar JSON: parameters, seed and the kernel/core annotations.
    pub fn write_metadata<W: Write>(&self, seed: u64, out: W) -> Result<()> {
        let meta = Metadata {
            model: self.model,
            seed,
            params: &self.params,
            vertex_count: self.graph.vertex_count(),
            edge_count: self.graph.edge_count(),
            truncated_trees: self.truncated_trees,
            core_vertices: &self.core_vertices,
            kernel_vertices: &self.kernel_vertices,
            kernel_edges: self.kernel.kernel.edges().collect(),
            path_length: &self.kernel.path_length,
        };
        serde_json::to_writer_pretty(out, &meta)?;
        Ok(())
    }
}

fn check_scale(n: usize, eps: f64) -> Result<()> {
    let scale = eps.powi(3) * n as f64;
    if scale < 50.0 {
        return Err(Error::InvalidParameter(format!(
            "ε³n = {scale:.3} below 50 (n = {n}, ε = {eps})"
        )));
    }
    Ok(())
}

/// Young-giant construction: `Z ~ N(⅔ε³n, ε³n)`, cubic kernel on `2⌊Z⌋`
/// vertices, Geometric(ε) paths, PGW(1 − ε) trees.
pub fn sample_young_giant<R: Rng + ?Sized>(n: usize, eps: f64, rng: &mut R) -> Result<AnnotatedGiant> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!("eps = {eps} outside (0, 1)")));
    }
    check_scale(n, eps)?;
    let scale = eps.powi(3) * n as f64;
    let (z, kernel_n) = (0..MAX_REDRAWS)
        .map(|_| {
            let z = normal_inverse_cdf(2.0 / 3.0 * scale, scale, rng);
            (z, 2 * z.floor().max(0.0) as usize)
        })
        .find(|&(_, k)| k > 0)
        .ok_or(Error::YoungGiantTooSmall)?;

    let kernel = sample_configuration(&vec![3; kernel_n], rng)?;
    let paths = GeomExpCoupling::with_success_probability(eps)?;
    let trees = PgwSampler::new(1.0 - eps, DEFAULT_TREE_CAP)?;
    let params = GiantParams {
        n,
        eps,
        p: (1.0 + eps) / n as f64,
        mu: 1.0 - eps,
        lambda: paths.rate(),
        z: Some(z),
        kernel_n,
        degree_counts: BTreeMap::from([(3, kernel_n)]),
        intensity: None,
    };
    Ok(assemble(GiantModel::Young, kernel, &paths, &trees, params, rng))
}

/// General construction: `Λ ~ N(1 + ε − μ, 1/(εn))`, i.i.d. Poisson(Λ)
/// degrees conditioned on an even kernel degree sum, configuration kernel on
/// the degree-≥3 slots, Geometric(1 − μ) paths, PGW(μ) trees.
pub fn sample_general_giant<R: Rng + ?Sized>(n: usize, eps: f64, rng: &mut R) -> Result<AnnotatedGiant> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::InvalidParameter(format!("eps = {eps} outside (0, 0.5]")));
    }
    check_scale(n, eps)?;
    let mu = conjugate_mu(eps)?;
    let mean = 1.0 + eps - mu;
    let variance = 1.0 / (eps * n as f64);

    for _ in 0..MAX_REDRAWS {
        let intensity = normal_inverse_cdf(mean, variance, rng);
        let Ok(poisson) = Poisson::new(intensity) else {
            continue;
        };
        let kernel_degrees = loop {
            let mut degrees = Vec::new();
            let mut parity = 0usize;
            for _ in 0..n {
                let d = poisson.sample(rng) as usize;
                if d >= 3 {
                    degrees.push(d);
                    parity ^= d & 1;
                }
            }
            if parity == 0 {
                break degrees;
            }
        };
        if kernel_degrees.is_empty() {
            continue;
        }
        let mut degree_counts = BTreeMap::new();
        for &d in &kernel_degrees {
            *degree_counts.entry(d).or_insert(0) += 1;
        }
        let kernel = sample_configuration(&kernel_degrees, rng)?;
        let paths = GeomExpCoupling::with_success_probability(1.0 - mu)?;
        let trees = PgwSampler::new(mu, DEFAULT_TREE_CAP)?;
        let params = GiantParams {
            n,
            eps,
            p: (1.0 + eps) / n as f64,
            mu,
            lambda: paths.rate(),
            z: None,
            kernel_n: kernel_degrees.len(),
            degree_counts,
            intensity: Some(intensity),
        };
        return Ok(assemble(GiantModel::General, kernel, &paths, &trees, params, rng));
    }
    Err(Error::EmptyKernel(MAX_REDRAWS))
}

fn assemble<R: Rng + ?Sized>(
    model: GiantModel,
    kernel: MultiGraph,
    paths: &GeomExpCoupling,
    trees: &PgwSampler,
    params: GiantParams,
    rng: &mut R,
) -> AnnotatedGiant {
    let kernel_n = kernel.vertex_count();
    let mut edges = Vec::new();
    let mut path_length = Vec::with_capacity(kernel.edge_count());
    let mut vertex_map: Vec<PathPosition> = (0..kernel_n).map(PathPosition::Kernel).collect();
    let mut next = kernel_n;
    for (edge, (a, b)) in kernel.edges().enumerate() {
        let (_, len) = paths.sample(rng);
        let mut prev = a;
        for offset in 1..len {
            edges.push((prev, next));
            vertex_map.push(PathPosition::Interior { edge, offset });
            prev = next;
            next += 1;
        }
        edges.push((prev, b));
        path_length.push(len);
    }
    let core_size = next;

    let mut truncated_trees = 0;
    for root in 0..core_size {
        let tree = trees.sample(rng);
        truncated_trees += usize::from(tree.truncated);
        let base = next - 1; // tree node j ≥ 1 becomes base + j
        for parent in tree.parent.iter().skip(1) {
            let p = parent.expect("non-root nodes have parents");
            edges.push((if p == 0 { root } else { base + p }, next));
            next += 1;
        }
    }

    let graph = MultiGraph::from_edges(next, &edges).expect("ids allocated in range");
    let kernel = KernelDecomposition {
        kernel,
        path_length,
        vertex_map,
        kernel_vertices: (0..kernel_n).collect(),
    };
    AnnotatedGiant {
        model,
        graph,
        core_vertices: (0..core_size).collect(),
        kernel_vertices: (0..kernel_n).collect(),
        kernel,
        params,
        truncated_trees,
    }
}
