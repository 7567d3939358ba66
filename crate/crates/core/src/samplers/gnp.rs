use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Erdős–Rényi G(n, p) by geometric skipping over the lexicographic list of
/// vertex pairs, O(n + m) expected time.
pub fn sample_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<MultiGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    if n >= 2 && p == 1.0 {
        for v in 1..n {
            edges.extend((0..v).map(|w| (w, v)));
        }
    } else if n >= 2 && p > 0.0 {
        edges.reserve((p * (n as f64) * (n as f64 - 1.0) / 2.0 * 1.05) as usize + 16);
        let log_q = (-p).ln_1p();
        let n = n as i64;
        let (mut v, mut w) = (1i64, -1i64);
        while v < n {
            let r: f64 = rng.random();
            let skip = ((-r).ln_1p() / log_q).floor().min(1e18) as i64;
            w = w.saturating_add(1 + skip);
            while w >= v && v < n {
                w -= v;
                v += 1;
            }
            if v < n {
                edges.push((w as usize, v as usize));
            }
        }
    }
    MultiGraph::from_edges(n, &edges)
}
