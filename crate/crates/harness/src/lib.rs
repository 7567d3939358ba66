//! Seeded experiment orchestration over `giantscope-core`: parameter sweeps,
//! prediction columns and CSV/JSON rows.
//!
//! Trial `t` of cell `c` draws from stream `(c << 32) | t` of the root seed,
//! so output depends only on the config and seed, not on scheduling.

pub mod config;
pub mod error;
pub mod experiments;
pub mod output;
pub mod predict;

pub use config::{ExperimentConfig, ExperimentKind, OutputFormat};
pub use error::{HarnessError, Result};
pub use experiments::{
    max_kernel_distance, run_giant_experiment, run_model_comparison, run_pgw_experiment,
    run_regular_fpp_experiment, stream_id, GiantRow, ModelLabel, ModelRow, ModelSummary, PgwRow,
    RegularFppRow, BUILD_ID, SCHEMA_VERSION,
};
pub use output::write_rows;
