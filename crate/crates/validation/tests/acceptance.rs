//! Acceptance checks for the library and experiment harness. Each test prints
//! one `PASS`/`FAIL` line to stdout (even under capture) and then asserts it.
//! Tests hold a shared lock so the runtime budgets measure one check at a time.

use std::io::Write;
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use giantscope::predict;
use giantscope::{
    run_giant_experiment, run_model_comparison, run_pgw_experiment, run_regular_fpp_experiment,
    write_rows, ExperimentConfig, ExperimentKind, GiantRow, ModelLabel, OutputFormat, RegularFppRow,
};
use giantscope_core::diameter::{all_pairs_diameter, exact_diameter, ifub_diameter};
use giantscope_core::fpp::{
    assign_exp_weights, exploration, exploration_with_limit, metric_diameter, metric_pair_max,
    DiameterMode, WeightedGraph, DEFAULT_METRIC_EXACT_CAP,
};
use giantscope_core::graph::{kernel_contract, largest_component, two_core};
use giantscope_core::rng::stream;
use giantscope_core::samplers::{
    conjugate_mu, coupled_geom_exp, pgw_survival_exact, pgw_survival_sandwich, sample_general_giant,
    sample_gnp, sample_regular, sample_young_giant,
};
use rand::seq::index::sample;
use rand::Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn verdict(name: &str, pass: bool, detail: String) {
    let line = format!("{} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    writeln!(std::io::stdout().lock(), "{line}").unwrap();
    assert!(pass, "{line}");
}

fn mean(xs: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, count) = xs.into_iter().fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    sum / count as f64
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

#[test]
fn conjugate_solver() {
    let _guard = serial();
    let start = Instant::now();
    let (lo, hi) = (1e-4f64.ln(), 0.5f64.ln());
    let mut worst_residual: f64 = 0.0;
    let mut expansion_ok = true;
    for i in 0..50 {
        let eps = (lo + (hi - lo) * i as f64 / 49.0).exp();
        let mu = conjugate_mu(eps).unwrap();
        let lambda = 1.0 + eps;
        let residual = (mu * (-mu).exp() - lambda * (-lambda).exp()).abs();
        worst_residual = worst_residual.max(residual);
        if eps <= 0.2 {
            expansion_ok &= (mu - (1.0 - eps)).abs() <= eps * eps;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "conjugate_solver",
        worst_residual < 1e-12 && expansion_ok && elapsed < Duration::from_secs(1),
        format!(
            "max residual {worst_residual:.3e}, |mu-(1-eps)| <= eps^2 for eps <= 0.2: {expansion_ok}, {:.3}s",
            secs(elapsed)
        ),
    );
}

#[test]
fn pgw_sandwich() {
    let _guard = serial();
    let start = Instant::now();
    let mut outside = Vec::new();
    let mut worst_formula: f64 = 0.0;
    for mu in [0.5, 0.9, 0.99] {
        for k in 1..=200usize {
            let exact = pgw_survival_exact(mu, k);
            let (lower, upper) = pgw_survival_sandwich(mu, k).unwrap();
            if !(lower <= exact && exact <= upper) {
                outside.push((mu, k));
            }
            // R_k summed term by term
            let r: f64 = (0..=k).map(|j| mu.powi(-(j as i32))).sum();
            worst_formula = worst_formula.max((lower * (1.0 + r) - 1.0).abs());
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "pgw_sandwich",
        outside.is_empty() && worst_formula < 1e-9 && elapsed < Duration::from_secs(1),
        format!(
            "{} of 600 outside bracket {outside:?}, bracket vs summed R_k rel err {worst_formula:.2e}, {:.3}s",
            outside.len(),
            secs(elapsed)
        ),
    );
}

/// Chi-square p-value of `lengths` against Geometric(p) on {1, 2, ...},
/// binning until the expected tail count drops below 5.
fn geometric_p_value(lengths: &[usize], p: f64) -> f64 {
    let total = lengths.len() as f64;
    let mut observed = std::collections::BTreeMap::<usize, f64>::new();
    for &l in lengths {
        *observed.entry(l).or_default() += 1.0;
    }
    let mut stat = 0.0;
    let mut bins = 0;
    let mut k = 1;
    let mut tail_prob = 1.0; // P(len ≥ k)
    loop {
        let prob = p * (1.0 - p).powi(k as i32 - 1);
        if total * (tail_prob - prob) < 5.0 {
            let expected = total * tail_prob;
            let seen: f64 = observed.range(k..).map(|(_, c)| c).sum();
            stat += (seen - expected).powi(2) / expected;
            bins += 1;
            break;
        }
        let expected = total * prob;
        let seen = observed.get(&k).copied().unwrap_or(0.0);
        stat += (seen - expected).powi(2) / expected;
        bins += 1;
        tail_prob -= prob;
        k += 1;
    }
    1.0 - ChiSquared::new((bins - 1) as f64).unwrap().cdf(stat)
}

#[test]
fn geometric_exponential_coupling() {
    let _guard = serial();
    let start = Instant::now();
    let mut details = Vec::new();
    let mut pass = true;
    for (i, rate) in [0.1, 0.5, 2.0].into_iter().enumerate() {
        let mut rng = stream(3, i as u64);
        let mut lengths = Vec::with_capacity(1_000_000);
        let mut max_gap: f64 = 0.0;
        for _ in 0..1_000_000 {
            let (w, len) = coupled_geom_exp(rate, &mut rng).unwrap();
            max_gap = max_gap.max((len as f64 - w).abs());
            lengths.push(len);
        }
        let p_value = geometric_p_value(&lengths, -(-rate).exp_m1());
        pass &= max_gap < 1.0 && p_value > 0.01;
        details.push(format!(
            "rate {rate}: max |len-w| = 1 - {:.2e}, chi-square p {p_value:.3}",
            1.0 - max_gap
        ));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(10);
    verdict(
        "geometric_exponential_coupling",
        pass,
        format!("{}; {:.2}s", details.join("; "), secs(elapsed)),
    );
}

#[test]
fn structural_round_trip() {
    let _guard = serial();
    let start = Instant::now();
    let mut failures = Vec::new();
    for i in 0..200u64 {
        let scale = 50.0 * 20f64.powf((i % 20) as f64 / 19.0);
        let eps = 0.05 * 4f64.powf((i / 20) as f64 / 9.0);
        let n = (scale / eps.powi(3)).ceil() as usize;
        let giant = sample_young_giant(n, eps, &mut stream(4, i)).unwrap();
        let g = &giant.graph;
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        let core = two_core(g);
        let kernel = kernel_contract(&core.graph).unwrap();
        let mut kernel_ids: Vec<usize> =
            kernel.kernel_vertices.iter().map(|&v| core.parent_ids[v]).collect();
        kernel_ids.sort_unstable();
        let ok = degree_sum == 2 * g.edge_count()
            && g.is_connected()
            && core.parent_ids == giant.core_vertices
            && kernel_ids == giant.kernel_vertices
            && kernel.canonical_paths() == giant.kernel.canonical_paths()
            && kernel.total_path_length() == core.graph.edge_count()
            && giant.kernel.total_path_length() == core.graph.edge_count()
            && (0..kernel.kernel.vertex_count()).all(|v| kernel.kernel.degree(v) >= 3);
        if !ok {
            failures.push((n, eps));
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "structural_round_trip",
        failures.is_empty() && elapsed < Duration::from_secs(60),
        format!("{} of 200 samples mismatched {failures:?}, {:.1}s", failures.len(), secs(elapsed)),
    );
}

struct FppRun {
    rows: Vec<RegularFppRow>,
    elapsed: Duration,
}

/// d = 3, n ∈ {10³, 10⁴}, 20 seeds each; shared by the FPP law and the
/// path-length check.
fn fpp_rows() -> &'static FppRun {
    static ROWS: OnceLock<FppRun> = OnceLock::new();
    ROWS.get_or_init(|| {
        let mut cfg = ExperimentConfig::new(ExperimentKind::RegularFpp);
        cfg.n = vec![1000, 10_000];
        cfg.d = vec![3];
        cfg.trials = 20;
        cfg.seed = 5;
        let start = Instant::now();
        let rows = run_regular_fpp_experiment(&cfg).unwrap();
        FppRun { rows, elapsed: start.elapsed() }
    })
}

#[test]
fn regular_fpp_law() {
    let _guard = serial();
    let run = fpp_rows();
    let mut pass = run.elapsed < Duration::from_secs(30 * 60);
    let mut details = Vec::new();
    let mut errors = [[0.0; 2]; 2];
    for (i, n) in [1000usize, 10_000].into_iter().enumerate() {
        let rows: Vec<&RegularFppRow> = run.rows.iter().filter(|r| r.n == n).collect();
        let clean = rows.len() == 20
            && rows.iter().all(|r| r.flag.is_empty() && r.weighted_exact == Some(true) && r.metric_exact == Some(true));
        pass &= clean;
        let ln = (n as f64).ln();
        let window = 20.0 * ln.ln();
        for (j, (label, target, values)) in [
            ("weighted", 5.0 / 3.0 * ln, rows.iter().map(|r| r.weighted_diam.unwrap_or(f64::NAN)).collect::<Vec<_>>()),
            ("metric", 2.0 * ln, rows.iter().map(|r| r.metric_diam.unwrap_or(f64::NAN)).collect()),
        ]
        .into_iter()
        .enumerate()
        {
            let m = mean(values);
            pass &= (m - target).abs() <= window;
            errors[j][i] = (m / target - 1.0).abs();
            details.push(format!("n={n} {label} mean {m:.3} vs {target:.3} ± {window:.1}"));
        }
    }
    for (j, label) in ["weighted", "metric"].into_iter().enumerate() {
        let closer = errors[j][1] < errors[j][0];
        pass &= closer;
        details.push(format!(
            "{label} |ratio-1| {:.4} -> {:.4} ({})",
            errors[j][0],
            errors[j][1],
            if closer { "closer" } else { "not closer" }
        ));
    }
    details.push(format!("{:.0}s", secs(run.elapsed)));
    verdict("regular_fpp_law", pass, details.join("; "));
}

/// Brute-force `max over (s, t)` of the metric distance between the point at
/// offset `s` on edge (a0, a1) and offset `t` on edge (b0, b1).
fn metric_grid(w_e: f64, w_f: f64, a: f64, b: f64, c: f64, e: f64, step: f64) -> f64 {
    let mut best: f64 = 0.0;
    let (ns, nt) = ((w_e / step).ceil() as usize, (w_f / step).ceil() as usize);
    for i in 0..=ns {
        let s = (i as f64 * step).min(w_e);
        let to_c = (s + a).min(w_e - s + c);
        let to_d = (s + b).min(w_e - s + e);
        for j in 0..=nt {
            let t = (j as f64 * step).min(w_f);
            best = best.max((t + to_c).min(w_f - t + to_d));
        }
    }
    best
}

#[test]
fn metric_closed_form() {
    let _guard = serial();
    let start = Instant::now();
    let mut rng = stream(6, 0);
    let mut worst: f64 = 0.0;
    let mut below_grid = 0;
    for _ in 0..1000 {
        let mut x = || rng.random_range(0.0f64..=5.0);
        let (w_e, w_f, a, b0, c0, e0) = (x(), x(), x(), x(), x(), x());
        let b = b0.clamp((a - w_f).max(0.0), a + w_f);
        let c = c0.clamp((a - w_e).max(0.0), a + w_e);
        let lo = (b - w_e).max(0.0).max(c - w_f);
        let e = e0.clamp(lo, (b + w_e).min(c + w_f).max(lo));
        let exact = metric_pair_max(w_e, w_f, a, b, c, e).unwrap();
        let grid = metric_grid(w_e, w_f, a, b, c, e, 1e-3);
        worst = worst.max((exact - grid).abs());
        if exact < grid - 1e-9 {
            below_grid += 1;
        }
    }
    let cycle = WeightedGraph::from_weighted_edges(
        5,
        &[(0, 1, 0.5), (1, 2, 1.25), (2, 3, 2.0), (3, 4, 0.75), (4, 0, 1.5)],
    )
    .unwrap();
    let cycle_value = metric_diameter(&cycle, DiameterMode::Exact, DEFAULT_METRIC_EXACT_CAP).unwrap().value;
    let bridge = WeightedGraph::from_weighted_edges(2, &[(0, 1, 1.75)]).unwrap();
    let bridge_value = metric_diameter(&bridge, DiameterMode::Exact, DEFAULT_METRIC_EXACT_CAP).unwrap().value;
    let elapsed = start.elapsed();
    verdict(
        "metric_closed_form",
        worst <= 2e-3
            && below_grid == 0
            && cycle_value == 3.0
            && bridge_value == 1.75
            && elapsed < Duration::from_secs(60),
        format!(
            "max |closed form - grid| {worst:.2e} over 1000 instances, {below_grid} below grid, cycle W=6 -> {cycle_value}, bridge 1.75 -> {bridge_value}, {:.1}s",
            secs(elapsed)
        ),
    );
}

#[test]
fn giant_diameter_laws() {
    let _guard = serial();
    let start = Instant::now();
    let mut cfg = ExperimentConfig::new(ExperimentKind::Giant);
    cfg.n = vec![100_000, 1_000_000];
    cfg.eps = vec![0.1];
    cfg.trials = 10;
    cfg.seed = 7;
    let rows = run_giant_experiment(&cfg).unwrap();
    let elapsed = start.elapsed();
    let mut pass = elapsed < Duration::from_secs(2 * 3600);
    let mut details = Vec::new();
    let targets = [1.0, 2.0 / 3.0, 5.0 / 9.0];
    let windows = [(0.75, 1.25), (0.55, 0.80), (0.45, 0.67)];
    let labels = ["diam_c1/D", "diam_core/diam_c1", "max_kernel/diam_c1"];
    let mut errors = [[0.0; 2]; 3];
    for (i, n) in cfg.n.iter().enumerate() {
        let cell: Vec<&GiantRow> = rows.iter().filter(|r| r.n == *n).collect();
        pass &= cell.len() == 10 && cell.iter().all(|r| r.flag.is_empty() && r.max_kernel_exact == Some(true));
        let ratios = [
            mean(cell.iter().map(|r| r.diam_c1.unwrap_or(0) as f64 / r.pred_d)),
            mean(cell.iter().map(|r| r.diam_core.unwrap_or(0) as f64 / r.diam_c1.unwrap_or(1) as f64)),
            mean(cell.iter().map(|r| r.max_kernel_dist.unwrap_or(0) as f64 / r.diam_c1.unwrap_or(1) as f64)),
        ];
        for j in 0..3 {
            let inside = windows[j].0 <= ratios[j] && ratios[j] <= windows[j].1;
            pass &= inside;
            errors[j][i] = (ratios[j] / targets[j] - 1.0).abs();
            details.push(format!(
                "n={n} {} {:.4} in [{}, {}]: {inside}",
                labels[j], ratios[j], windows[j].0, windows[j].1
            ));
        }
    }
    for j in 0..3 {
        let closer = errors[j][1] < errors[j][0];
        pass &= closer;
        details.push(format!(
            "{} |ratio/target-1| {:.4} -> {:.4} ({})",
            labels[j],
            errors[j][0],
            errors[j][1],
            if closer { "closer" } else { "not closer" }
        ));
    }
    details.push(format!("{:.0}s", secs(elapsed)));
    verdict("giant_diameter_laws", pass, details.join("; "));
}

#[test]
fn direct_and_young_giants_agree() {
    let _guard = serial();
    let start = Instant::now();
    let mut cfg = ExperimentConfig::new(ExperimentKind::ModelCompare);
    cfg.n = vec![1_000_000];
    cfg.eps = vec![0.1];
    cfg.trials = 20;
    cfg.seed = 8;
    let (rows, summary) = run_model_comparison(&cfg).unwrap();
    let elapsed = start.elapsed();
    let direct = summary.iter().find(|s| s.model == ModelLabel::Direct).unwrap();
    let young = summary.iter().find(|s| s.model == ModelLabel::Young).unwrap();
    let expected = 4.0 / 3.0 * 0.1f64.powi(3) * 1e6;
    let near = |k: f64| (k / expected - 1.0).abs() <= 0.15;
    let pass = rows.iter().all(|r| r.flag.is_empty())
        && young.trials == 20
        && direct.trials == 20
        && young.kernel_gap <= 0.10
        && young.core_gap <= 0.05
        && near(direct.mean_kernel)
        && near(young.mean_kernel)
        && elapsed < Duration::from_secs(3600);
    verdict(
        "direct_and_young_giants_agree",
        pass,
        format!(
            "mean kernel direct {:.1} young {:.1} (gap {:.3}, limit 0.10); mean core direct {:.1} young {:.1} (gap {:.3}, limit 0.05); kernel target {expected:.1} ± 15%: direct {} young {}; {:.0}s",
            direct.mean_kernel,
            young.mean_kernel,
            young.kernel_gap,
            direct.mean_core,
            young.mean_core,
            young.core_gap,
            near(direct.mean_kernel),
            near(young.mean_kernel),
            secs(elapsed)
        ),
    );
}

/// Least-squares slope of `ln y` against `x`.
fn log_slope(points: &[(f64, f64)]) -> f64 {
    let mx = mean(points.iter().map(|p| p.0));
    let my = mean(points.iter().map(|p| p.1.ln()));
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1.ln() - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Empirical `P(T ≥ base + ℓ)` on ℓ = 0, 0.5, …, 5 with its fitted log-slope
/// over the nonzero points; an empty tail has slope −∞.
fn tail_slope(times: &[f64], base: f64) -> (Vec<f64>, f64) {
    let tail: Vec<f64> = (0..=10)
        .map(|i| {
            let cut = base + i as f64 * 0.5;
            times.iter().filter(|&&t| t >= cut).count() as f64 / times.len() as f64
        })
        .collect();
    let points: Vec<(f64, f64)> = tail
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0.0)
        .map(|(i, &p)| (i as f64 * 0.5, p))
        .collect();
    let slope = if points.len() < 2 { f64::NEG_INFINITY } else { log_slope(&points) };
    (tail, slope)
}

#[test]
fn exploration_tail() {
    let _guard = serial();
    let start = Instant::now();
    let n = 10_000;
    let q = predict::exploration_q(3, n);
    let mut times = Vec::with_capacity(1000);
    for seed in 0..20u64 {
        let mut rng = stream(9, seed);
        let g = assign_exp_weights(sample_regular(n, 3, &mut rng).unwrap(), 1.0, &mut rng).unwrap();
        for src in sample(&mut rng, n, 50) {
            times.push(exploration(&g, src, q).unwrap().t_q);
        }
    }
    let explore_time = start.elapsed();
    let base = predict::exploration_offset(n);
    let (tail, slope) = tail_slope(&times, base);
    let mut sorted = times.clone();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[sorted.len() / 2];
    let (median_tail, median_slope) = tail_slope(&times, median);

    let run = fpp_rows();
    let bound = 4.0 * 3.0 * std::f64::consts::E * (n as f64).ln();
    let counts: Vec<usize> = run.rows.iter().filter(|r| r.n == n).filter_map(|r| r.path_edges).collect();
    let within = counts.len() == 20 && counts.iter().all(|&c| c as f64 <= bound);
    verdict(
        "exploration_tail",
        slope <= -0.8 && within && explore_time < Duration::from_secs(30 * 60),
        format!(
            "q={q}, base {base:.3}, tail {tail:?}, slope {slope}; from median {median:.3}: tail {median_tail:?}, slope {median_slope:.3}; path edges max {:?} vs bound {bound:.1}; {:.1}s",
            counts.iter().max(),
            secs(explore_time)
        ),
    );
}

fn csv_bytes<T: serde::Serialize>(rows: &[T]) -> Vec<u8> {
    let mut out = Vec::new();
    write_rows(rows, OutputFormat::Csv, &mut out).unwrap();
    out
}

#[test]
fn diameter_oracle_and_determinism() {
    let _guard = serial();
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut rng = stream(10, 0);
    for i in 0..200u64 {
        let n = rng.random_range(20..=1000usize);
        let g = if i % 4 == 3 {
            sample_regular(n + n % 2, 3, &mut rng).unwrap()
        } else {
            let c = [1.2, 1.5, 2.0][i as usize % 3];
            largest_component(&sample_gnp(n, c / n as f64, &mut rng).unwrap()).graph
        };
        if !g.is_connected() {
            continue;
        }
        let truth = all_pairs_diameter(&g).unwrap().value;
        let fast = exact_diameter(&g).unwrap().value;
        let ifub = ifub_diameter(&g).unwrap().value;
        if fast != truth || ifub != truth {
            mismatches.push((i, truth, fast, ifub));
        }
    }

    let mut giant = ExperimentConfig::new(ExperimentKind::Giant);
    giant.trials = 3;
    giant.timing = false;
    let mut fpp = ExperimentConfig::new(ExperimentKind::RegularFpp);
    fpp.n = vec![500];
    fpp.trials = 3;
    fpp.timing = false;
    let mut pgw = ExperimentConfig::new(ExperimentKind::Pgw);
    pgw.trees = 10_000;
    pgw.timing = false;
    let same = csv_bytes(&run_giant_experiment(&giant).unwrap()) == csv_bytes(&run_giant_experiment(&giant).unwrap())
        && csv_bytes(&run_regular_fpp_experiment(&fpp).unwrap())
            == csv_bytes(&run_regular_fpp_experiment(&fpp).unwrap())
        && csv_bytes(&run_pgw_experiment(&pgw).unwrap()) == csv_bytes(&run_pgw_experiment(&pgw).unwrap());
    let elapsed = start.elapsed();
    verdict(
        "diameter_oracle_and_determinism",
        mismatches.is_empty() && same && elapsed < Duration::from_secs(300),
        format!(
            "{} of 200 diameters disagree with all-pairs BFS {mismatches:?}; repeated runs byte-identical: {same}; {:.1}s",
            mismatches.len(),
            secs(elapsed)
        ),
    );
}

#[test]
fn general_model_degree_three_count() {
    let _guard = serial();
    let (n, eps) = (1_000_000, 0.1);
    let target = 4.0 / 3.0 * eps * eps * eps * n as f64;
    let m = mean((0..50).map(|seed| {
        let g = sample_general_giant(n, eps, &mut stream(11, seed)).unwrap();
        g.params.degree_counts.get(&3).copied().unwrap_or(0) as f64
    }));
    verdict(
        "general_model_degree_three_count",
        (m / target - 1.0).abs() <= 0.10,
        format!("mean N_3 {m:.1} over 50 seeds vs (4/3)eps^3 n = {target:.1} ± 10%"),
    );
}

#[test]
fn exploration_tree_excess() {
    let _guard = serial();
    let n = 10_000;
    let r = (n as f64).ln().powi(3).ceil() as usize;
    let mut small = 0;
    let mut excesses = Vec::new();
    for seed in 0..100u64 {
        let mut rng = stream(12, seed);
        let g = assign_exp_weights(sample_regular(n, 3, &mut rng).unwrap(), 1.0, &mut rng).unwrap();
        let rec = exploration_with_limit(&g, 0, 2, r).unwrap();
        assert!(rec.excess.windows(2).all(|w| w[0] <= w[1]));
        let x = rec.excess[r - 1];
        if x <= 2 {
            small += 1;
        }
        excesses.push(x as f64);
    }
    verdict(
        "exploration_tree_excess",
        small >= 99,
        format!(
            "excess at step r={r} is <= 2 in {small} of 100 seeds (need 99); mean excess {:.2}",
            mean(excesses)
        ),
    );
}

#[test]
fn regular_fpp_degree_four_trend() {
    let _guard = serial();
    let start = Instant::now();
    let mut cfg = ExperimentConfig::new(ExperimentKind::RegularFpp);
    cfg.n = vec![1000, 10_000];
    cfg.d = vec![4];
    cfg.trials = 10;
    cfg.seed = 13;
    let rows = run_regular_fpp_experiment(&cfg).unwrap();
    let mut errors = Vec::new();
    let mut pass = rows.iter().all(|r| r.flag.is_empty());
    for n in [1000usize, 10_000] {
        let ln = (n as f64).ln();
        let slope = mean(rows.iter().filter(|r| r.n == n).map(|r| r.weighted_diam.unwrap_or(f64::NAN) / ln));
        pass &= (slope - 1.0).abs() <= 20.0 * ln.ln() / ln;
        errors.push((n, slope));
    }
    let closer = (errors[1].1 - 1.0).abs() < (errors[0].1 - 1.0).abs();
    pass &= closer;
    verdict(
        "regular_fpp_degree_four_trend",
        pass,
        format!(
            "mean weighted diam / ln n: n={} {:.4}, n={} {:.4}; target 1, {}; {:.0}s",
            errors[0].0,
            errors[0].1,
            errors[1].0,
            errors[1].1,
            if closer { "closer" } else { "not closer" },
            secs(start.elapsed())
        ),
    );
}
