//! Prediction columns. Pure functions of the cell parameters; natural logs.

use std::f64::consts::E;

/// Giant diameter scale `(3/ε)·ln(ε³n)`.
pub fn giant_scale(eps: f64, n: usize) -> f64 {
    3.0 / eps * (eps.powi(3) * n as f64).ln()
}

pub fn core_prediction(eps: f64, n: usize) -> f64 {
    2.0 / 3.0 * giant_scale(eps, n)
}

pub fn kernel_prediction(eps: f64, n: usize) -> f64 {
    5.0 / 9.0 * giant_scale(eps, n)
}

/// Coefficient of `ln n` in the weighted diameter of a random d-regular graph.
pub fn weighted_coefficient(d: usize) -> f64 {
    1.0 / (d as f64 - 2.0) + 2.0 / d as f64
}

/// Coefficient of `ln n` in the metric-graph diameter.
pub fn metric_coefficient(d: usize) -> f64 {
    1.0 + 1.0 / (d as f64 - 2.0)
}

/// Edge-count bound `4·d·e·ln n` for the path realizing the weighted diameter.
pub fn path_edge_bound(d: usize, n: usize) -> f64 {
    4.0 * d as f64 * E * (n as f64).ln()
}

/// Weight threshold at which the expected number of good vertices is `ln n`.
pub fn good_threshold(d: usize, n: usize) -> f64 {
    let ln = (n as f64).ln();
    (ln - ln.ln()) / d as f64
}

/// Ball size `2·sqrt(d·n·ln n)` used for the exploration statistic.
pub fn exploration_q(d: usize, n: usize) -> usize {
    let n = n as f64;
    (2.0 * (d as f64 * n * n.ln()).sqrt()).ceil() as usize
}

/// Time offset `½ln n + 7·ln ln n` of the exploration tail.
pub fn exploration_offset(n: usize) -> f64 {
    let ln = (n as f64).ln();
    0.5 * ln + 7.0 * ln.ln()
}
