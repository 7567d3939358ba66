use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Uniform perfect matching on the half-edges of `degrees`, contracted to a
/// multigraph (self-loops and parallel edges kept).
pub fn sample_configuration<R: Rng + ?Sized>(degrees: &[usize], rng: &mut R) -> Result<MultiGraph> {
    let total: usize = degrees.iter().sum();
    if total % 2 == 1 {
        return Err(Error::OddDegreeSum(total));
    }
    let mut stubs = Vec::with_capacity(total);
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v, d));
    }
    stubs.shuffle(rng);
    let edges: Vec<(usize, usize)> = stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    MultiGraph::from_edges(degrees.len(), &edges)
}

/// Random `d`-regular configuration multigraph on `n` vertices.
pub fn sample_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Result<MultiGraph> {
    sample_configuration(&vec![d; n], rng)
}
