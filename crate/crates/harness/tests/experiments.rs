use giantscope::{
    run_giant_experiment, run_model_comparison, run_pgw_experiment, run_regular_fpp_experiment,
    stream_id, write_rows, ExperimentConfig, ExperimentKind, ModelLabel, OutputFormat,
};

fn config(kind: ExperimentKind) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(kind);
    cfg.timing = false;
    cfg
}

fn csv_bytes<T: serde::Serialize>(rows: &[T]) -> Vec<u8> {
    let mut out = Vec::new();
    write_rows(rows, OutputFormat::Csv, &mut out).unwrap();
    out
}

#[test]
fn giant_rows_are_ordered_and_consistent() {
    let mut cfg = config(ExperimentKind::Giant);
    cfg.n = vec![100_000, 200_000];
    cfg.trials = 2;
    let rows = run_giant_experiment(&cfg).unwrap();
    assert_eq!(rows.len(), 4);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!((r.cell, r.trial), (i / 2, i % 2));
        assert_eq!(r.stream, stream_id(r.cell, r.trial));
        assert!(r.flag.is_empty(), "{}", r.flag);
        let (c1, core, kernel) = (r.c1_size.unwrap(), r.core_size.unwrap(), r.kernel_size.unwrap());
        assert!(kernel <= core && core <= c1);
        let (d1, dc, dk) = (r.diam_c1.unwrap(), r.diam_core.unwrap(), r.max_kernel_dist.unwrap());
        assert!(dk <= dc && dc <= d1);
        assert!((r.ratio_c1.unwrap() - d1 as f64 / r.pred_d).abs() < 1e-12);
        assert!((r.pred_core / r.pred_d - 2.0 / 3.0).abs() < 1e-12);
        assert!(r.wall_time.is_none());
    }
}

#[test]
fn output_ignores_thread_count() {
    let mut cfg = config(ExperimentKind::RegularFpp);
    cfg.n = vec![300, 500];
    cfg.trials = 3;
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| csv_bytes(&run_regular_fpp_experiment(&cfg).unwrap()))
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn regular_fpp_relations_hold() {
    let mut cfg = config(ExperimentKind::RegularFpp);
    cfg.n = vec![400];
    cfg.d = vec![3, 4];
    cfg.trials = 3;
    let rows = run_regular_fpp_experiment(&cfg).unwrap();
    assert_eq!(rows.len(), 6);
    for r in &rows {
        assert!(r.flag.is_empty(), "{}", r.flag);
        let (w, m) = (r.weighted_diam.unwrap(), r.metric_diam.unwrap());
        assert!(w <= m && m <= w + r.max_weight.unwrap());
        assert!(r.weighted_exact.unwrap() && r.metric_exact.unwrap());
        assert!((r.path_edges.unwrap() as f64) <= r.path_edge_bound);
    }

    cfg.exact_cap = 100;
    cfg.d = vec![3];
    for r in run_regular_fpp_experiment(&cfg).unwrap() {
        assert_eq!(r.weighted_exact, Some(false));
        assert_eq!(r.metric_exact, Some(false));
    }
}

#[test]
fn pgw_monte_carlo_agrees_with_recursion() {
    let mut cfg = config(ExperimentKind::Pgw);
    cfg.mu = vec![0.5, 0.9, 0.99];
    cfg.k = vec![1, 5, 20];
    cfg.trees = 20_000;
    let rows = run_pgw_experiment(&cfg).unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.contained));
    let inside = rows.iter().filter(|r| r.within_3se).count();
    assert!(inside >= 8, "{inside} of 9 within 3 SE");
}

#[test]
fn model_comparison_summarises_against_direct() {
    let mut cfg = config(ExperimentKind::ModelCompare);
    cfg.n = vec![100_000];
    cfg.trials = 3;
    let (rows, summary) = run_model_comparison(&cfg).unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(summary.len(), 2);
    assert_eq!(summary[0].model, ModelLabel::Direct);
    assert_eq!(summary[0].kernel_gap, 0.0);
    assert_eq!(summary[1].model, ModelLabel::Young);
    assert!(summary.iter().all(|s| s.trials == 3));
    assert!(rows.iter().all(|r| r.flag.is_empty()));
}

#[test]
fn pgw_million_trees_within_three_standard_errors() {
    let mut cfg = config(ExperimentKind::Pgw);
    cfg.mu = vec![0.9];
    cfg.k = vec![30];
    cfg.trees = 1_000_000;
    let rows = run_pgw_experiment(&cfg).unwrap();
    let r = &rows[0];
    assert!(r.contained);
    assert!(r.within_3se, "{} vs {} (se {})", r.mc_estimate, r.exact, r.mc_se);

    cfg.mu = vec![0.5];
    cfg.k = vec![1];
    cfg.trees = 1000;
    let r = &run_pgw_experiment(&cfg).unwrap()[0];
    assert!((r.exact - 0.39347).abs() < 1e-5);
    assert!(0.25 < r.exact && r.exact < 0.5);
}
