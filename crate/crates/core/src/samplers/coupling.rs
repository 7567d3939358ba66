use rand::distr::Open01;
use rand::Rng;

use crate::error::{Error, Result};

/// Joint draw of `w ~ Exp(rate)` and `len = ⌈w⌉`.
///
/// Marginally `len ~ Geometric(1 − e^{−rate})` on `{1, 2, …}` and always
/// `0 ≤ len − w < 1`.
#[derive(Clone, Copy, Debug)]
pub struct GeomExpCoupling {
    rate: f64,
}

impl GeomExpCoupling {
    pub fn new(rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(Error::InvalidParameter(format!("rate = {rate} must be positive")));
        }
        Ok(Self { rate })
    }

    /// Coupling whose lengths are Geometric with success probability `p`.
    pub fn with_success_probability(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter(format!("success probability {p} outside (0, 1)")));
        }
        Self::new(-(-p).ln_1p())
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (f64, usize) {
        let u: f64 = rng.sample(Open01);
        let w = -u.ln() / self.rate;
        (w, (w.ceil() as usize).max(1))
    }
}

pub fn coupled_geom_exp<R: Rng + ?Sized>(rate: f64, rng: &mut R) -> Result<(f64, usize)> {
    Ok(GeomExpCoupling::new(rate)?.sample(rng))
}
