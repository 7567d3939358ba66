use std::time::Instant;

use giantscope_core::diameter::{exact_diameter, Bfs};
use giantscope_core::fpp::{
    assign_exp_weights, count_good_vertices, diameter_path_edge_count, fpp_diameters,
    DiameterMode,
};
use giantscope_core::graph::{kernel_contract, largest_component, two_core};
use giantscope_core::rng::{stream, StreamRng};
use giantscope_core::samplers::{
    pgw_reaches_level, pgw_survival_exact, pgw_survival_sandwich, sample_general_giant,
    sample_gnp, sample_regular, sample_young_giant, AnnotatedGiant,
};
use giantscope_core::MultiGraph;
use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, ExperimentKind};
use crate::error::{HarnessError, Result};
use crate::predict;

/// Bumped only when a column changes meaning; new columns are appended.
pub const SCHEMA_VERSION: u32 = 1;

pub const BUILD_ID: &str = env!("GIANTSCOPE_BUILD_ID");

/// RNG stream of one trial: cell index in the high half, trial in the low.
pub fn stream_id(cell: usize, trial: usize) -> u64 {
    ((cell as u64) << 32) | trial as u64
}

fn check_kind(cfg: &ExperimentConfig, kind: ExperimentKind) -> Result<()> {
    if cfg.experiment != kind {
        return Err(HarnessError::Config(format!(
            "config is for {}, not {}",
            cfg.experiment.name(),
            kind.name()
        )));
    }
    cfg.validate()
}

fn pairs<A: Copy, B: Copy>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}

/// Runs `trial(cell, index)` for every item, in parallel, in (cell, trial)
/// order.
fn run_trials<T: Send>(
    cells: usize,
    trials: usize,
    trial: impl Fn(usize, usize) -> T + Sync,
) -> Vec<T> {
    let items: Vec<(usize, usize)> = pairs(&(0..cells).collect::<Vec<_>>(), &(0..trials).collect::<Vec<_>>());
    items.into_par_iter().map(|(c, t)| trial(c, t)).collect()
}

fn timed<T>(timing: bool, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    let start = Instant::now();
    let out = f();
    (out, timing.then(|| start.elapsed().as_secs_f64()))
}

fn ratio(measured: Option<usize>, predicted: f64) -> Option<f64> {
    let r = measured? as f64 / predicted;
    (r.is_finite() && r > 0.0).then_some(r)
}

fn flag_of<T>(r: &Result<T>) -> String {
    r.as_ref().err().map(ToString::to_string).unwrap_or_default()
}

/// Largest distance in `graph` between two of the `kernel` vertices.
///
/// Exact when the kernel has at most `exact_cap` vertices. Otherwise BFS
/// runs from `sample_size` uniform kernel vertices plus a double sweep over
/// the kernel, and the second value is false (a lower bound).
pub fn max_kernel_distance<R: Rng + ?Sized>(
    graph: &MultiGraph,
    kernel: &[usize],
    exact_cap: usize,
    sample_size: usize,
    rng: &mut R,
) -> (usize, bool) {
    if kernel.is_empty() {
        return (0, true);
    }
    let n = graph.vertex_count();
    let farthest_kernel = |bfs: &Bfs| -> (usize, usize) {
        kernel
            .iter()
            .filter_map(|&k| bfs.distance(k).map(|d| (d, k)))
            .fold((0, kernel[0]), |best, (d, k)| {
                if d > best.0 || (d == best.0 && k < best.1) {
                    (d, k)
                } else {
                    best
                }
            })
    };
    let exact = kernel.len() <= exact_cap;
    let sources: Vec<usize> = if exact {
        kernel.to_vec()
    } else {
        let mut bfs = Bfs::new(n);
        bfs.run(graph, kernel[0]);
        let (_, a) = farthest_kernel(&bfs);
        bfs.run(graph, a);
        let (_, b) = farthest_kernel(&bfs);
        let mut s: Vec<usize> = sample(rng, kernel.len(), sample_size.min(kernel.len()))
            .into_iter()
            .map(|i| kernel[i])
            .collect();
        s.extend([a, b]);
        s
    };
    let best = sources
        .par_iter()
        .map_init(
            || Bfs::new(n),
            |bfs, &s| {
                bfs.run(graph, s);
                farthest_kernel(bfs).0
            },
        )
        .max()
        .unwrap_or(0);
    (best, exact)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GiantRow {
    pub schema_version: u32,
    pub build_id: String,
    pub experiment: String,
    pub cell: usize,
    pub trial: usize,
    pub seed: u64,
    pub stream: u64,
    pub n: usize,
    pub eps: f64,
    pub c1_size: Option<usize>,
    pub core_size: Option<usize>,
    pub kernel_size: Option<usize>,
    pub diam_c1: Option<usize>,
    pub diam_core: Option<usize>,
    pub max_kernel_dist: Option<usize>,
    /// False when `max_kernel_dist` is a sampled lower bound.
    pub max_kernel_exact: Option<bool>,
    pub pred_d: f64,
    pub pred_core: f64,
    pub pred_kernel: f64,
    pub ratio_c1: Option<f64>,
    pub ratio_core: Option<f64>,
    pub ratio_kernel: Option<f64>,
    pub core_to_c1: Option<f64>,
    pub kernel_to_c1: Option<f64>,
    /// Empty unless the trial failed.
    pub flag: String,
    pub wall_time: Option<f64>,
}

struct GiantMeasures {
    c1: usize,
    core: usize,
    kernel: usize,
    diam_c1: usize,
    diam_core: usize,
    max_kernel: usize,
    max_kernel_exact: bool,
}

fn giant_trial(n: usize, eps: f64, cfg: &ExperimentConfig, rng: &mut StreamRng) -> Result<GiantMeasures> {
    let g = sample_gnp(n, (1.0 + eps) / n as f64, rng)?;
    let c1 = largest_component(&g).graph;
    drop(g);
    let core = two_core(&c1);
    let kernel = kernel_contract(&core.graph)?;
    if kernel.kernel_vertices.is_empty() {
        return Err(giantscope_core::Error::EmptyKernel(0).into());
    }
    let diam_c1 = exact_diameter(&c1)?.value;
    let diam_core = exact_diameter(&core.graph)?.value;
    // pendant trees never shorten a path between core vertices
    let (max_kernel, max_kernel_exact) = max_kernel_distance(
        &core.graph,
        &kernel.kernel_vertices,
        cfg.kernel_exact_cap,
        cfg.kernel_sample,
        rng,
    );
    Ok(GiantMeasures {
        c1: c1.vertex_count(),
        core: core.graph.vertex_count(),
        kernel: kernel.kernel_vertices.len(),
        diam_c1,
        diam_core,
        max_kernel,
        max_kernel_exact,
    })
}

/// Direct G(n, (1+ε)/n) trials: giant, 2-core and kernel sizes with their
/// diameters, against the `(3/ε)·ln(ε³n)` scale.
pub fn run_giant_experiment(cfg: &ExperimentConfig) -> Result<Vec<GiantRow>> {
    check_kind(cfg, ExperimentKind::Giant)?;
    let cells = pairs(&cfg.n, &cfg.eps);
    Ok(run_trials(cells.len(), cfg.trials, |cell, trial| {
        let (n, eps) = cells[cell];
        let id = stream_id(cell, trial);
        let (res, wall_time) = timed(cfg.timing, || giant_trial(n, eps, cfg, &mut stream(cfg.seed, id)));
        let m = res.as_ref().ok();
        let diam_c1 = m.map(|m| m.diam_c1);
        let diam_core = m.map(|m| m.diam_core);
        let max_kernel = m.map(|m| m.max_kernel);
        GiantRow {
            schema_version: SCHEMA_VERSION,
            build_id: BUILD_ID.into(),
            experiment: "giant".into(),
            cell,
            trial,
            seed: cfg.seed,
            stream: id,
            n,
            eps,
            c1_size: m.map(|m| m.c1),
            core_size: m.map(|m| m.core),
            kernel_size: m.map(|m| m.kernel),
            diam_c1,
            diam_core,
            max_kernel_dist: max_kernel,
            max_kernel_exact: m.map(|m| m.max_kernel_exact),
            pred_d: predict::giant_scale(eps, n),
            pred_core: predict::core_prediction(eps, n),
            pred_kernel: predict::kernel_prediction(eps, n),
            ratio_c1: ratio(diam_c1, predict::giant_scale(eps, n)),
            ratio_core: ratio(diam_core, predict::core_prediction(eps, n)),
            ratio_kernel: ratio(max_kernel, predict::kernel_prediction(eps, n)),
            core_to_c1: diam_c1.and_then(|d| ratio(diam_core, d as f64)),
            kernel_to_c1: diam_c1.and_then(|d| ratio(max_kernel, d as f64)),
            flag: flag_of(&res),
            wall_time,
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularFppRow {
    pub schema_version: u32,
    pub build_id: String,
    pub experiment: String,
    pub cell: usize,
    pub trial: usize,
    pub seed: u64,
    pub stream: u64,
    pub n: usize,
    pub d: usize,
    pub weighted_diam: Option<f64>,
    pub diam_u: Option<usize>,
    pub diam_v: Option<usize>,
    /// False when sampled sources give only a lower bound.
    pub weighted_exact: Option<bool>,
    pub metric_diam: Option<f64>,
    pub metric_exact: Option<bool>,
    pub max_weight: Option<f64>,
    pub path_edges: Option<usize>,
    pub path_edge_bound: f64,
    pub good_threshold: f64,
    pub good_vertices: Option<usize>,
    pub pred_weighted: f64,
    pub pred_metric: f64,
    pub ratio_weighted: Option<f64>,
    pub ratio_metric: Option<f64>,
    pub flag: String,
    pub wall_time: Option<f64>,
}

struct FppMeasures {
    weighted: f64,
    pair: (usize, usize),
    weighted_exact: bool,
    metric: f64,
    metric_exact: bool,
    max_weight: f64,
    path_edges: usize,
    good: usize,
}

fn fpp_trial(n: usize, d: usize, cfg: &ExperimentConfig, rng: &mut StreamRng) -> Result<FppMeasures> {
    let g = sample_regular(n, d, rng)?;
    let g = assign_exp_weights(g, 1.0, rng)?;
    let mode = if n <= cfg.exact_cap {
        DiameterMode::Exact
    } else {
        DiameterMode::Sampled {
            sources: cfg.sampled_sources,
            seed: rng.random(),
        }
    };
    let (w, m) = fpp_diameters(&g, mode, cfg.exact_cap)?;
    let max_weight = g.max_weight();
    if !(m.value >= w.value && m.value <= w.value + max_weight) {
        return Err(HarnessError::Trial(format!(
            "metric diameter {} outside [{}, {}]",
            m.value,
            w.value,
            w.value + max_weight
        )));
    }
    let path_edges = diameter_path_edge_count(&g, w.pair.0, w.pair.1)?;
    let good = count_good_vertices(&g, predict::good_threshold(d, n))?;
    Ok(FppMeasures {
        weighted: w.value,
        pair: w.pair,
        weighted_exact: w.exact,
        metric: m.value,
        metric_exact: m.exact,
        max_weight,
        path_edges,
        good,
    })
}

/// Exp(1) first-passage percolation on random d-regular multigraphs.
pub fn run_regular_fpp_experiment(cfg: &ExperimentConfig) -> Result<Vec<RegularFppRow>> {
    check_kind(cfg, ExperimentKind::RegularFpp)?;
    let cells = pairs(&cfg.n, &cfg.d);
    Ok(run_trials(cells.len(), cfg.trials, |cell, trial| {
        let (n, d) = cells[cell];
        let id = stream_id(cell, trial);
        let (res, wall_time) = timed(cfg.timing, || fpp_trial(n, d, cfg, &mut stream(cfg.seed, id)));
        let m = res.as_ref().ok();
        let ln = (n as f64).ln();
        let pred_weighted = predict::weighted_coefficient(d) * ln;
        let pred_metric = predict::metric_coefficient(d) * ln;
        RegularFppRow {
            schema_version: SCHEMA_VERSION,
            build_id: BUILD_ID.into(),
            experiment: "regular_fpp".into(),
            cell,
            trial,
            seed: cfg.seed,
            stream: id,
            n,
            d,
            weighted_diam: m.map(|m| m.weighted),
            diam_u: m.map(|m| m.pair.0),
            diam_v: m.map(|m| m.pair.1),
            weighted_exact: m.map(|m| m.weighted_exact),
            metric_diam: m.map(|m| m.metric),
            metric_exact: m.map(|m| m.metric_exact),
            max_weight: m.map(|m| m.max_weight),
            path_edges: m.map(|m| m.path_edges),
            path_edge_bound: predict::path_edge_bound(d, n),
            good_threshold: predict::good_threshold(d, n),
            good_vertices: m.map(|m| m.good),
            pred_weighted,
            pred_metric,
            ratio_weighted: m.map(|m| m.weighted / pred_weighted),
            ratio_metric: m.map(|m| m.metric / pred_metric),
            flag: flag_of(&res),
            wall_time,
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PgwRow {
    pub schema_version: u32,
    pub build_id: String,
    pub experiment: String,
    pub cell: usize,
    pub seed: u64,
    pub stream: u64,
    pub mu: f64,
    pub k: usize,
    /// Probability that level `k` is nonempty, from the exact recursion.
    pub exact: f64,
    pub lower: f64,
    pub upper: f64,
    pub contained: bool,
    pub trees: usize,
    pub mc_estimate: f64,
    /// Standard error of the estimate at the exact probability.
    pub mc_se: f64,
    pub within_3se: bool,
    pub wall_time: Option<f64>,
}

/// Level-survival probabilities of Poisson Galton-Watson trees: exact
/// recursion, resistance sandwich and Monte Carlo.
pub fn run_pgw_experiment(cfg: &ExperimentConfig) -> Result<Vec<PgwRow>> {
    check_kind(cfg, ExperimentKind::Pgw)?;
    let cells = pairs(&cfg.mu, &cfg.k);
    let rows: Vec<Result<PgwRow>> = run_trials(cells.len(), 1, |cell, _| {
        let (mu, k) = cells[cell];
        let id = stream_id(cell, 0);
        let ((exact, sandwich, hits), wall_time) = timed(cfg.timing, || {
            let mut rng = stream(cfg.seed, id);
            let hits = (0..cfg.trees).filter(|_| pgw_reaches_level(mu, k, &mut rng)).count();
            (pgw_survival_exact(mu, k), pgw_survival_sandwich(mu, k), hits)
        });
        let (lower, upper) = sandwich?;
        let estimate = hits as f64 / cfg.trees as f64;
        let se = (exact * (1.0 - exact) / cfg.trees as f64).sqrt();
        Ok(PgwRow {
            schema_version: SCHEMA_VERSION,
            build_id: BUILD_ID.into(),
            experiment: "pgw".into(),
            cell,
            seed: cfg.seed,
            stream: id,
            mu,
            k,
            exact,
            lower,
            upper,
            contained: lower <= exact && exact <= upper,
            trees: cfg.trees,
            mc_estimate: estimate,
            mc_se: se,
            within_3se: (estimate - exact).abs() <= 3.0 * se,
            wall_time,
        })
    });
    rows.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelLabel {
    /// Extracted from a G(n, p) sample.
    Direct,
    Young,
    General,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelRow {
    pub schema_version: u32,
    pub build_id: String,
    pub experiment: String,
    pub cell: usize,
    pub trial: usize,
    pub seed: u64,
    pub stream: u64,
    pub n: usize,
    pub eps: f64,
    pub model: ModelLabel,
    pub c1_size: Option<usize>,
    pub core_size: Option<usize>,
    pub kernel_size: Option<usize>,
    /// Diameter of the largest component of the 2-core.
    pub diam_core: Option<usize>,
    pub truncated_trees: Option<usize>,
    pub flag: String,
    pub wall_time: Option<f64>,
}

/// Per-model means of one cell and their relative gaps to the direct model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub cell: usize,
    pub n: usize,
    pub eps: f64,
    pub model: ModelLabel,
    /// Unflagged trials behind the means.
    pub trials: usize,
    pub mean_c1: f64,
    pub mean_core: f64,
    pub mean_kernel: f64,
    pub mean_diam_core: f64,
    pub c1_gap: f64,
    pub core_gap: f64,
    pub kernel_gap: f64,
    pub diam_core_gap: f64,
}

struct ModelMeasures {
    c1: usize,
    core: usize,
    kernel: usize,
    diam_core: usize,
    truncated: usize,
}

fn core_diameter(core: &MultiGraph) -> Result<usize> {
    Ok(exact_diameter(&largest_component(core).graph)?.value)
}

fn direct_trial(n: usize, eps: f64, rng: &mut StreamRng) -> Result<ModelMeasures> {
    let g = sample_gnp(n, (1.0 + eps) / n as f64, rng)?;
    let c1 = largest_component(&g).graph;
    drop(g);
    let core = two_core(&c1).graph;
    let kernel = kernel_contract(&core)?;
    Ok(ModelMeasures {
        c1: c1.vertex_count(),
        core: core.vertex_count(),
        kernel: kernel.kernel_vertices.len(),
        diam_core: core_diameter(&core)?,
        truncated: 0,
    })
}

fn constructed_trial(giant: AnnotatedGiant) -> Result<ModelMeasures> {
    let core = giant.graph.induced(&giant.core_vertices).graph;
    Ok(ModelMeasures {
        c1: largest_component(&giant.graph).graph.vertex_count(),
        core: giant.core_size(),
        kernel: giant.kernel_size(),
        diam_core: core_diameter(&core)?,
        truncated: giant.truncated_trees,
    })
}

fn model_stream(model: ModelLabel, cell: usize, trial: usize) -> u64 {
    ((model as u64) << 56) | stream_id(cell, trial)
}

/// Paired trials of direct extraction against the constructed models.
pub fn run_model_comparison(cfg: &ExperimentConfig) -> Result<(Vec<ModelRow>, Vec<ModelSummary>)> {
    check_kind(cfg, ExperimentKind::ModelCompare)?;
    let cells = pairs(&cfg.n, &cfg.eps);
    let mut models = vec![ModelLabel::Direct, ModelLabel::Young];
    if cfg.include_general {
        models.push(ModelLabel::General);
    }
    let per_trial = run_trials(cells.len(), cfg.trials, |cell, trial| {
        let (n, eps) = cells[cell];
        models
            .iter()
            .map(|&model| {
                let id = model_stream(model, cell, trial);
                let (res, wall_time) = timed(cfg.timing, || {
                    let rng = &mut stream(cfg.seed, id);
                    match model {
                        ModelLabel::Direct => direct_trial(n, eps, rng),
                        ModelLabel::Young => constructed_trial(sample_young_giant(n, eps, rng)?),
                        ModelLabel::General => {
                            constructed_trial(sample_general_giant(n, eps, rng)?)
                        }
                    }
                });
                let m = res.as_ref().ok();
                let mut flag = flag_of(&res);
                if m.is_some_and(|m| m.truncated > 0) {
                    flag = "truncated PGW tree".into();
                }
                ModelRow {
                    schema_version: SCHEMA_VERSION,
                    build_id: BUILD_ID.into(),
                    experiment: "model_compare".into(),
                    cell,
                    trial,
                    seed: cfg.seed,
                    stream: id,
                    n,
                    eps,
                    model,
                    c1_size: m.map(|m| m.c1),
                    core_size: m.map(|m| m.core),
                    kernel_size: m.map(|m| m.kernel),
                    diam_core: m.map(|m| m.diam_core),
                    truncated_trees: m.map(|m| m.truncated),
                    flag,
                    wall_time,
                }
            })
            .collect::<Vec<_>>()
    });
    let rows: Vec<ModelRow> = per_trial.into_iter().flatten().collect();
    let summaries = summarize_models(&rows, &cells, &models);
    Ok((rows, summaries))
}

fn summarize_models(rows: &[ModelRow], cells: &[(usize, f64)], models: &[ModelLabel]) -> Vec<ModelSummary> {
    let mean = |xs: &[usize]| xs.iter().sum::<usize>() as f64 / xs.len() as f64;
    let mut out = Vec::new();
    for (cell, &(n, eps)) in cells.iter().enumerate() {
        let stats: Vec<(ModelLabel, usize, [f64; 4])> = models
            .iter()
            .map(|&model| {
                let ok: Vec<&ModelRow> = rows
                    .iter()
                    .filter(|r| r.cell == cell && r.model == model && r.flag.is_empty())
                    .collect();
                let col = |f: fn(&ModelRow) -> Option<usize>| -> Vec<usize> {
                    ok.iter().filter_map(|r| f(r)).collect()
                };
                (
                    model,
                    ok.len(),
                    [
                        mean(&col(|r| r.c1_size)),
                        mean(&col(|r| r.core_size)),
                        mean(&col(|r| r.kernel_size)),
                        mean(&col(|r| r.diam_core)),
                    ],
                )
            })
            .collect();
        let direct = stats[0].2;
        let gap = |x: f64, base: f64| (x - base).abs() / base;
        for (model, trials, m) in stats {
            out.push(ModelSummary {
                cell,
                n,
                eps,
                model,
                trials,
                mean_c1: m[0],
                mean_core: m[1],
                mean_kernel: m[2],
                mean_diam_core: m[3],
                c1_gap: gap(m[0], direct[0]),
                core_gap: gap(m[1], direct[1]),
                kernel_gap: gap(m[2], direct[2]),
                diam_core_gap: gap(m[3], direct[3]),
            });
        }
    }
    out
}
