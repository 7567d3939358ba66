use crate::error::{Error, Result};

/// Farthest a point on a segment of length `w` can be from a point whose
/// distances to the two segment ends are `p1` and `p2`.
#[inline]
pub(crate) fn segment_far(w: f64, p1: f64, p2: f64) -> f64 {
    (0.5 * (w + p1 + p2)).min(w + p1.min(p2))
}

/// Largest distance between a point on edge `e = (a, b)` and a point on a
/// different edge `f = (c, d)`, given `A = d(a,c)`, `B = d(a,d)`,
/// `C = d(b,c)`, `E = d(b,d)`.
///
/// For a point at offset `s` from `a`, the farthest point of `f` is
/// `segment_far(w_f, p1(s), p2(s))` with `p1 = min(s+A, w_e−s+C)` and
/// `p2 = min(s+B, w_e−s+E)`. That is concave and piecewise linear in `s`,
/// so the maximum sits on an endpoint, a kink of `p1` or `p2`, or a point
/// where `|p1 − p2| = w_f`.
pub fn metric_pair_max(w_e: f64, w_f: f64, a: f64, b: f64, c: f64, e: f64) -> Result<f64> {
    for (name, x) in [("w_e", w_e), ("w_f", w_f), ("A", a), ("B", b), ("C", c), ("E", e)] {
        if !(x >= 0.0 && x.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "{name} = {x} must be finite and nonnegative"
            )));
        }
    }
    Ok(pair_max_unchecked(w_e, w_f, a, b, c, e))
}

pub(crate) fn pair_max_unchecked(w_e: f64, w_f: f64, a: f64, b: f64, c: f64, e: f64) -> f64 {
    let p1 = |s: f64| (s + a).min(w_e - s + c);
    let p2 = |s: f64| (s + b).min(w_e - s + e);
    let value = |s: f64| segment_far(w_f, p1(s), p2(s));

    let mut knots = [0.0, w_e, 0.5 * (w_e + c - a), 0.5 * (w_e + e - b)];
    for k in &mut knots {
        *k = k.clamp(0.0, w_e);
    }
    knots.sort_by(f64::total_cmp);

    let mut best = value(0.0).max(value(w_e));
    for win in knots.windows(2) {
        let (lo, hi) = (win[0], win[1]);
        best = best.max(value(lo));
        if hi <= lo {
            continue;
        }
        // p1 − p2 is linear on [lo, hi]
        let g_lo = p1(lo) - p2(lo);
        let g_hi = p1(hi) - p2(hi);
        for target in [w_f, -w_f] {
            if (g_lo - target) * (g_hi - target) < 0.0 {
                let s = lo + (hi - lo) * (target - g_lo) / (g_hi - g_lo);
                best = best.max(value(s));
            }
        }
    }
    best
}
