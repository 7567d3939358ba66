use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Giant,
    RegularFpp,
    Pgw,
    ModelCompare,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Giant => "giant",
            Self::RegularFpp => "regular_fpp",
            Self::Pgw => "pgw",
            Self::ModelCompare => "model_compare",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Everything one run needs. Cells are the cartesian product of the
/// parameter lists; every cell runs `trials` independent trials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub n: Vec<usize>,
    pub eps: Vec<f64>,
    /// Degrees for `regular_fpp`.
    pub d: Vec<usize>,
    /// Offspring means for `pgw`.
    pub mu: Vec<f64>,
    /// Levels for `pgw`.
    pub k: Vec<usize>,
    pub trials: usize,
    /// Monte Carlo trees per `pgw` cell.
    pub trees: usize,
    pub seed: u64,
    /// Largest graph for exact weighted and metric diameters.
    pub exact_cap: usize,
    /// Sources when the FPP diameters fall back to sampling.
    pub sampled_sources: usize,
    /// Largest kernel for an exact `max_kernel_dist`.
    pub kernel_exact_cap: usize,
    /// Kernel sources sampled above `kernel_exact_cap`.
    pub kernel_sample: usize,
    /// Also run the general construction in `model_compare`.
    pub include_general: bool,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    /// Record per-trial wall time. Off gives byte-reproducible output.
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            experiment: ExperimentKind::Giant,
            n: vec![100_000],
            eps: vec![0.1],
            d: vec![3],
            mu: vec![0.5, 0.9],
            k: vec![1, 10, 30],
            trials: 10,
            trees: 100_000,
            seed: 0,
            exact_cap: giantscope_core::fpp::DEFAULT_METRIC_EXACT_CAP,
            sampled_sources: 64,
            kernel_exact_cap: 5000,
            kernel_sample: 1000,
            include_general: false,
            out: None,
            format: OutputFormat::Csv,
            timing: true,
        }
    }
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind) -> Self {
        Self {
            experiment,
            ..Self::default()
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// Checks every precondition before any sampling happens.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(HarnessError::Config(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        match self.experiment {
            ExperimentKind::Pgw => {
                if self.mu.is_empty() || self.k.is_empty() {
                    return bad("pgw needs nonempty mu and k lists".into());
                }
                if let Some(mu) = self.mu.iter().find(|&&m| !(m > 0.0 && m < 1.0)) {
                    return bad(format!("mu = {mu} outside (0, 1)"));
                }
                if self.k.contains(&0) {
                    return bad("k must be at least 1".into());
                }
                if self.trees == 0 {
                    return bad("trees must be at least 1".into());
                }
            }
            ExperimentKind::RegularFpp => {
                if self.n.is_empty() || self.d.is_empty() {
                    return bad("regular_fpp needs nonempty n and d lists".into());
                }
                if let Some(d) = self.d.iter().find(|&&d| d < 3) {
                    return bad(format!("d = {d} must be at least 3"));
                }
                for &n in &self.n {
                    if n < 2 {
                        return bad(format!("n = {n} must be at least 2"));
                    }
                    if let Some(d) = self.d.iter().find(|&&d| n * d % 2 == 1) {
                        return bad(format!("n·d odd for n = {n}, d = {d}"));
                    }
                }
                if self.sampled_sources == 0 {
                    return bad("sampled_sources must be at least 1".into());
                }
            }
            ExperimentKind::Giant | ExperimentKind::ModelCompare => {
                if self.n.is_empty() || self.eps.is_empty() {
                    return bad(format!("{} needs nonempty n and eps lists", self.experiment.name()));
                }
                if let Some(eps) = self.eps.iter().find(|&&e| !(e > 0.0 && e < 1.0)) {
                    return bad(format!("eps = {eps} outside (0, 1)"));
                }
                for &n in &self.n {
                    for &eps in &self.eps {
                        let scale = eps.powi(3) * n as f64;
                        if scale < 50.0 {
                            return bad(format!(
                                "eps³n = {scale:.3} below 50 for n = {n}, eps = {eps}"
                            ));
                        }
                    }
                }
                if self.include_general {
                    if let Some(eps) = self.eps.iter().find(|&&e| e > 0.5) {
                        return bad(format!("general model needs eps ≤ 0.5, got {eps}"));
                    }
                }
                if self.kernel_sample == 0 {
                    return bad("kernel_sample must be at least 1".into());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_toml_with_defaults() {
        let cfg = ExperimentConfig::from_toml_str(
            "experiment = \"giant\"\nn = [100000, 1000000]\neps = [0.1]\ntrials = 3\nseed = 7\n",
        )
        .unwrap();
        assert_eq!(cfg.n, vec![100_000, 1_000_000]);
        assert_eq!(cfg.trials, 3);
        assert_eq!(cfg.kernel_exact_cap, 5000);
        assert!(cfg.timing);
        cfg.validate().unwrap();
    }

    #[test]
    fn rejects_unknown_keys_and_bad_kinds() {
        assert!(ExperimentConfig::from_toml_str("trails = 3\n").is_err());
        assert!(ExperimentConfig::from_toml_str("experiment = \"nope\"\n").is_err());
    }

    #[test]
    fn validation() {
        let mut cfg = ExperimentConfig::new(ExperimentKind::ModelCompare);
        cfg.n = vec![10_000];
        cfg.eps = vec![0.1];
        let err = cfg.validate().unwrap_err().to_string();
        assert!(err.contains("below 50"), "{err}");
        cfg.n = vec![100_000];
        cfg.validate().unwrap();
        cfg.trials = 0;
        assert!(cfg.validate().is_err());

        let mut reg = ExperimentConfig::new(ExperimentKind::RegularFpp);
        reg.n = vec![1001];
        assert!(reg.validate().is_err());
        reg.n = vec![1000];
        reg.validate().unwrap();
        reg.d = vec![2];
        assert!(reg.validate().is_err());

        let mut pgw = ExperimentConfig::new(ExperimentKind::Pgw);
        pgw.validate().unwrap();
        pgw.mu = vec![1.0];
        assert!(pgw.validate().is_err());
    }
}
