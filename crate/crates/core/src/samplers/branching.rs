use rand::Rng;
use rand_distr::{Distribution, Poisson};

use crate::error::{Error, Result};

/// Default size cap for sampled trees.
pub const DEFAULT_TREE_CAP: usize = 1_000_000;

/// Breadth-first realization of a Poisson Galton–Watson tree.
///
/// Node 0 is the root; nodes are numbered in breadth-first order so every
/// parent precedes its children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgwTree {
    pub parent: Vec<Option<usize>>,
    pub height: usize,
    /// Set when the tree hit the size cap before dying out.
    pub truncated: bool,
}

impl PgwTree {
    pub fn size(&self) -> usize {
        self.parent.len()
    }

    /// Number of nodes on each level, root level first.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.size()];
        let mut sizes = vec![0; self.height + 1];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                depth[v] = depth[*p] + 1;
            }
            sizes[depth[v]] += 1;
        }
        sizes
    }
}

/// Reusable sampler for subcritical PGW(μ) trees.
#[derive(Clone, Debug)]
pub struct PgwSampler {
    mu: f64,
    offspring: Poisson<f64>,
    cap: usize,
}

impl PgwSampler {
    pub fn new(mu: f64, cap: usize) -> Result<Self> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "offspring mean {mu} outside (0, 1); supercritical trees may not terminate"
            )));
        }
        if cap == 0 {
            return Err(Error::InvalidParameter("tree cap must be at least 1".into()));
        }
        let offspring = Poisson::new(mu).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        Ok(Self { mu, offspring, cap })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PgwTree {
        let mut parent = vec![None];
        let mut depth = vec![0usize];
        let mut truncated = false;
        let mut next = 0;
        'grow: while next < parent.len() {
            let children = self.offspring.sample(rng) as usize;
            for _ in 0..children {
                if parent.len() == self.cap {
                    truncated = true;
                    break 'grow;
                }
                parent.push(Some(next));
                depth.push(depth[next] + 1);
            }
            next += 1;
        }
        PgwTree {
            height: *depth.last().unwrap(),
            parent,
            truncated,
        }
    }
}

pub fn sample_pgw_tree<R: Rng + ?Sized>(mu: f64, cap: usize, rng: &mut R) -> Result<PgwTree> {
    Ok(PgwSampler::new(mu, cap)?.sample(rng))
}

/// `P(L_k ≠ ∅)` for a PGW(μ) tree via `q_0 = 1`, `q_j = 1 − e^{−μ q_{j−1}}`.
pub fn pgw_survival_exact(mu: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |q, _| -(-mu * q).exp_m1())
}

/// `(1/(1+R_k), 2/(1+R_k))` with `R_k = ((1/μ)^{k+1} − 1)/((1/μ) − 1)`, the
/// effective-resistance bracket on level-`k` survival.
pub fn pgw_survival_sandwich(mu: f64, k: usize) -> Result<(f64, f64)> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::InvalidParameter(format!("mu = {mu} outside (0, 1)")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("level k must be at least 1".into()));
    }
    let log_ratio = -mu.ln(); // ln(1/μ)
    let exponent = (k + 1) as f64 * log_ratio;
    let ratio_minus_one = (1.0 - mu) / mu;
    let lower = if exponent <= 300.0 * std::f64::consts::LN_10 {
        let resistance = exponent.exp_m1() / ratio_minus_one;
        1.0 / (1.0 + resistance)
    } else {
        // ln R = (k+1) ln(1/μ) + ln(1 − μ^{k+1}) − ln(1/μ − 1)
        let log_r = exponent + (-(-exponent).exp()).ln_1p() - ratio_minus_one.ln();
        (-(log_r + (-log_r).exp().ln_1p())).exp()
    };
    Ok((lower, 2.0 * lower))
}

/// Whether a PGW(μ) tree reaches level `k`, simulated through generation
/// sizes (`Z_{j+1} ~ Poisson(μ Z_j)`).
pub fn pgw_reaches_level<R: Rng + ?Sized>(mu: f64, k: usize, rng: &mut R) -> bool {
    let mut generation = 1u64;
    for _ in 0..k {
        let mean = mu * generation as f64;
        generation = Poisson::new(mean).expect("positive mean").sample(rng) as u64;
        if generation == 0 {
            return false;
        }
    }
    true
}
