use std::collections::BTreeMap;

use rand::distr::Open01;
use rand::Rng;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Conjugate of `1 + eps`: the root `μ ∈ (0, 1)` of `μe^{−μ} = (1+ε)e^{−(1+ε)}`.
///
/// Solved in the log form `ln μ − μ = ln(1+ε) − (1+ε)`, rewritten around 1 with
/// `ln_1p` so both sides keep full relative precision as `ε → 0`. Bisection
/// brackets the root and Newton polishes it.
pub fn conjugate_mu(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 10.0) {
        return Err(Error::InvalidParameter(format!("eps = {eps} outside (0, 10]")));
    }
    // φ(μ) = ln μ − μ + 1, increasing on (0, 1), φ(1) = 0
    let phi = |mu: f64| (mu - 1.0).ln_1p() - (mu - 1.0);
    let target = eps.ln_1p() - eps;
    let (mut lo, mut hi) = (f64::MIN_POSITIVE, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if phi(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut mu = 0.5 * (lo + hi);
    for _ in 0..3 {
        let step = (phi(mu) - target) / (1.0 / mu - 1.0);
        let next = mu - step;
        if next.is_finite() && next > 0.0 && next < 1.0 {
            mu = next;
        }
    }
    Ok(mu)
}

/// Normal draw by inverse-CDF transform of one uniform from `rng`.
pub fn normal_inverse_cdf<R: Rng + ?Sized>(mean: f64, variance: f64, rng: &mut R) -> f64 {
    let u: f64 = rng.sample(Open01);
    Normal::new(mean, variance.sqrt())
        .expect("positive variance")
        .inverse_cdf(u)
}

/// Every parameter of one giant-component construction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GiantParams {
    /// Ambient vertex count.
    pub n: usize,
    pub eps: f64,
    /// Edge probability of the matching G(n, p), `(1 + ε)/n`.
    pub p: f64,
    /// Offspring mean of the attached trees (`1 − ε` or the conjugate).
    pub mu: f64,
    /// Rate of the exponential coupled to the path lengths.
    pub lambda: f64,
    /// Normal draw fixing the kernel size (young model).
    pub z: Option<f64>,
    /// Kernel vertex count.
    pub kernel_n: usize,
    /// Kernel vertices by degree (general model; `{3: N}` for the young model).
    pub degree_counts: BTreeMap<usize, usize>,
    /// Poisson degree intensity Λ (general model).
    pub intensity: Option<f64>,
}
