use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use giantscope::{
    run_giant_experiment, run_model_comparison, run_pgw_experiment, run_regular_fpp_experiment,
    write_rows, ExperimentConfig, ExperimentKind, HarnessError, OutputFormat, Result, BUILD_ID,
};
use giantscope_core::diameter::exact_diameter;
use giantscope_core::fpp::{assign_exp_weights, fpp_diameters, DiameterMode, WeightedGraph};
use giantscope_core::graph::io::{read_edge_list, write_edge_list};
use giantscope_core::rng::stream;
use giantscope_core::samplers::{sample_general_giant, sample_gnp, sample_regular, sample_young_giant};
use serde_json::json;

#[derive(Parser)]
#[command(name = "giantscope", version = BUILD_ID, about = "Giant-component and first-passage percolation diameter experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Giant, 2-core and kernel diameters of G(n, (1+ε)/n)
    Giant(RunArgs),
    /// Weighted and metric diameters of Exp(1)-weighted random regular graphs
    #[command(name = "regular_fpp", alias = "regular-fpp")]
    RegularFpp(RunArgs),
    /// Level survival of Poisson Galton-Watson trees
    Pgw(RunArgs),
    /// Direct extraction against the constructed giant models
    #[command(name = "model_compare", alias = "model-compare")]
    ModelCompare(RunArgs),
    /// Sample one graph and write it as an edge list
    Sample(SampleArgs),
    /// Diameter of a graph read from an edge list
    Diameter(DiameterArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct RunArgs {
    /// TOML config; flags below override its values
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    eps: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    d: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    mu: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long)]
    trials: Option<usize>,
    /// Monte Carlo trees per pgw cell
    #[arg(long)]
    trees: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest graph for exact weighted and metric diameters
    #[arg(long)]
    exact_cap: Option<usize>,
    /// Largest kernel for an exact max_kernel_dist
    #[arg(long)]
    kernel_exact_cap: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Leave wall_time empty so reruns are byte-identical
    #[arg(long)]
    no_timing: bool,
    /// Add the general construction to model_compare
    #[arg(long)]
    include_general: bool,
    /// Where model_compare writes its per-model summary; stderr when absent
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleModel {
    Gnp,
    Regular,
    Young,
    General,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(value_enum)]
    model: SampleModel,
    #[arg(long)]
    n: usize,
    /// Supercriticality; G(n, p) uses p = (1+ε)/n unless --p is given
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 3)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Attach Exp(rate) edge weights and write a weighted edge list
    #[arg(long)]
    weights: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON metadata for the constructed models
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Args)]
struct DiameterArgs {
    /// Edge list; `u v` rows, or `u v w` with --weighted
    #[arg(long)]
    graph: PathBuf,
    /// Weighted and metric diameters instead of hop diameter
    #[arg(long)]
    weighted: bool,
    /// Use this many sampled sources (a lower bound) instead of all
    #[arg(long)]
    sampled: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = giantscope_core::fpp::DEFAULT_METRIC_EXACT_CAP)]
    exact_cap: usize,
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn build_config(kind: ExperimentKind, args: &RunArgs) -> Result<ExperimentConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
            let table: toml::Table = text
                .parse()
                .map_err(|e: toml::de::Error| HarnessError::Config(e.to_string()))?;
            if let Some(named) = table.get("experiment").and_then(|v| v.as_str()) {
                if named != kind.name() {
                    return Err(HarnessError::Config(format!(
                        "config names experiment {named}, command is {}",
                        kind.name()
                    )));
                }
            }
            let mut cfg = ExperimentConfig::from_toml_str(&text)?;
            cfg.experiment = kind;
            cfg
        }
        None => ExperimentConfig::new(kind),
    };
    let set = |dst: &mut Vec<_>, src: &Vec<_>| {
        if !src.is_empty() {
            dst.clone_from(src);
        }
    };
    set(&mut cfg.n, &args.n);
    set(&mut cfg.d, &args.d);
    set(&mut cfg.k, &args.k);
    if !args.eps.is_empty() {
        cfg.eps.clone_from(&args.eps);
    }
    if !args.mu.is_empty() {
        cfg.mu.clone_from(&args.mu);
    }
    cfg.trials = args.trials.unwrap_or(cfg.trials);
    cfg.trees = args.trees.unwrap_or(cfg.trees);
    cfg.seed = args.seed.unwrap_or(cfg.seed);
    cfg.exact_cap = args.exact_cap.unwrap_or(cfg.exact_cap);
    cfg.kernel_exact_cap = args.kernel_exact_cap.unwrap_or(cfg.kernel_exact_cap);
    if let Some(out) = &args.out {
        cfg.out = Some(out.clone());
    }
    if let Some(f) = args.format {
        cfg.format = match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        };
    }
    cfg.timing &= !args.no_timing;
    cfg.include_general |= args.include_general;
    cfg.validate()?;
    Ok(cfg)
}

/// Returns the number of flagged rows.
fn run_experiment(kind: ExperimentKind, args: &RunArgs) -> Result<usize> {
    let cfg = build_config(kind, args)?;
    let out = output(cfg.out.as_deref())?;
    match kind {
        ExperimentKind::Giant => {
            let rows = run_giant_experiment(&cfg)?;
            write_rows(&rows, cfg.format, out)?;
            Ok(rows.iter().filter(|r| !r.flag.is_empty()).count())
        }
        ExperimentKind::RegularFpp => {
            let rows = run_regular_fpp_experiment(&cfg)?;
            write_rows(&rows, cfg.format, out)?;
            Ok(rows.iter().filter(|r| !r.flag.is_empty()).count())
        }
        ExperimentKind::Pgw => {
            let rows = run_pgw_experiment(&cfg)?;
            write_rows(&rows, cfg.format, out)?;
            Ok(0)
        }
        ExperimentKind::ModelCompare => {
            let (rows, summary) = run_model_comparison(&cfg)?;
            write_rows(&rows, cfg.format, out)?;
            match &args.summary {
                Some(_) => write_rows(&summary, cfg.format, output(args.summary.as_deref())?)?,
                None => write_rows(&summary, cfg.format, io::stderr().lock())?,
            }
            Ok(rows.iter().filter(|r| !r.flag.is_empty()).count())
        }
    }
}

fn run_sample(args: &SampleArgs) -> Result<()> {
    let mut rng = stream(args.seed, 0);
    let mut meta = None;
    let graph = match args.model {
        SampleModel::Gnp => {
            let p = args.p.unwrap_or((1.0 + args.eps) / args.n as f64);
            sample_gnp(args.n, p, &mut rng)?
        }
        SampleModel::Regular => sample_regular(args.n, args.d, &mut rng)?,
        SampleModel::Young | SampleModel::General => {
            let giant = match args.model {
                SampleModel::Young => sample_young_giant(args.n, args.eps, &mut rng)?,
                _ => sample_general_giant(args.n, args.eps, &mut rng)?,
            };
            if let Some(path) = &args.meta {
                giant.write_metadata(args.seed, BufWriter::new(File::create(path)?))?;
            }
            meta = Some(giant.kernel_size());
            giant.graph
        }
    };
    if args.meta.is_some() && meta.is_none() {
        return Err(HarnessError::Config("--meta applies to young and general only".into()));
    }
    let mut out = output(args.out.as_deref())?;
    match args.weights {
        Some(rate) => assign_exp_weights(graph, rate, &mut rng)?.write_edge_list(&mut out)?,
        None => write_edge_list(&graph, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn run_diameter(args: &DiameterArgs) -> Result<()> {
    let input = BufReader::new(File::open(&args.graph)?);
    let report = if args.weighted {
        let g = WeightedGraph::read_edge_list(input)?;
        let mode = match args.sampled {
            Some(sources) => DiameterMode::Sampled { sources, seed: args.seed },
            None => DiameterMode::Exact,
        };
        let (w, m) = fpp_diameters(&g, mode, args.exact_cap)?;
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "weighted_diameter": w.value,
            "pair": [w.pair.0, w.pair.1],
            "weighted_exact": w.exact,
            "metric_diameter": m.value,
            "metric_exact": m.exact,
        })
    } else {
        let g = read_edge_list(input)?;
        let d = exact_diameter(&g)?;
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "diameter": d.value,
            "pair": [d.pair.0, d.pair.1],
        })
    };
    println!("{report}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Giant(a) => run_experiment(ExperimentKind::Giant, a),
        Command::RegularFpp(a) => run_experiment(ExperimentKind::RegularFpp, a),
        Command::Pgw(a) => run_experiment(ExperimentKind::Pgw, a),
        Command::ModelCompare(a) => run_experiment(ExperimentKind::ModelCompare, a),
        Command::Sample(a) => run_sample(a).map(|_| 0),
        Command::Diameter(a) => run_diameter(a).map(|_| 0),
    };
    match result {
        Ok(0) => ExitCode::SUCCESS,
        Ok(flagged) => {
            eprintln!("giantscope: {flagged} trial(s) flagged");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("giantscope: {e}");
            match e {
                HarnessError::Config(_)
                | HarnessError::Core(giantscope_core::Error::InvalidParameter(_)) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
