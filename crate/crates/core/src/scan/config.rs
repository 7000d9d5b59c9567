use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::coloring::chromatic::{ChiMode, ChromaticOptions};
use crate::error::{Error, Result};
use crate::generate::enumerate::EnumSpec;
use crate::invariants::density::DEFAULT_DENSITY_CAP;

/// Environment variable that overrides `workers`.
pub const WORKERS_ENV: &str = "STEFFENLAB_WORKERS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ScanConfig {
    pub enum_spec: EnumSpec,
    #[serde(default = "default_timeout")]
    pub solver_timeout_seconds: u64,
    #[serde(default = "default_workers")]
    pub workers: usize,
    /// JSONL report; required for checkpointing.
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub checkpoint_path: Option<PathBuf>,
    /// Count graphs with `χ' ≥ Δ + 2` but `χ' ≠ Γ`.
    #[serde(default = "yes")]
    pub gs_check: bool,
    /// Count graphs exceeding the girth-refined bound.
    #[serde(default = "yes")]
    pub steffen_check: bool,
    /// Search for a ring subgraph whenever the main theorem's hypotheses hold.
    #[serde(default = "yes")]
    pub thm13_check: bool,
    /// Also run the lemma suite after the scan.
    #[serde(default)]
    pub lemma_suite: bool,
    /// Use the density shortcut when `Γ ≥ Δ + 2`.
    #[serde(default)]
    pub gs_fastpath: bool,
    #[serde(default = "default_random_graphs")]
    pub random_graphs: usize,
    #[serde(default = "default_random_max_n")]
    pub random_max_n: usize,
    #[serde(default = "default_random_max_mu")]
    pub random_max_mu: u32,
    /// Seed for the lemma suite when it runs as part of a scan.
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_timeout() -> u64 {
    60
}
fn default_workers() -> usize {
    1
}
fn yes() -> bool {
    true
}
fn default_random_graphs() -> usize {
    1000
}
fn default_random_max_n() -> usize {
    12
}
fn default_random_max_mu() -> u32 {
    3
}
fn default_seed() -> u64 {
    42
}

impl ScanConfig {
    /// Defaults for everything except the enumeration bounds.
    pub fn new(enum_spec: EnumSpec) -> Self {
        ScanConfig {
            enum_spec,
            solver_timeout_seconds: default_timeout(),
            workers: default_workers(),
            output_path: None,
            checkpoint_path: None,
            gs_check: true,
            steffen_check: true,
            thm13_check: true,
            lemma_suite: false,
            gs_fastpath: false,
            random_graphs: default_random_graphs(),
            random_max_n: default_random_max_n(),
            random_max_mu: default_random_max_mu(),
            seed: default_seed(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ScanConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.enum_spec.validate().map_err(|e| match e {
            Error::Config(m) => Error::Config(m),
            other => Error::Config(other.to_string()),
        })?;
        if self.workers < 1 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        if self.solver_timeout_seconds < 1 {
            return Err(Error::Config(
                "solverTimeoutSeconds must be at least 1".into(),
            ));
        }
        if self.checkpoint_path.is_some() && self.output_path.is_none() {
            return Err(Error::Config("checkpointPath needs an outputPath".into()));
        }
        if self.random_max_n > crate::graph::MAX_VERTICES {
            return Err(Error::Config("randomMaxN is too large".into()));
        }
        if self.random_max_mu < 1 {
            return Err(Error::Config("randomMaxMu must be at least 1".into()));
        }
        Ok(())
    }

    /// `workers`, unless the environment overrides it.
    pub fn effective_workers(&self) -> Result<usize> {
        match std::env::var(WORKERS_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(w) if w >= 1 => Ok(w),
                _ => Err(Error::Config(format!(
                    "{WORKERS_ENV}={v} is not a positive integer"
                ))),
            },
            Err(_) => Ok(self.workers),
        }
    }

    pub fn chromatic_options(&self) -> ChromaticOptions {
        ChromaticOptions {
            mode: if self.gs_fastpath {
                ChiMode::GsFastpath
            } else {
                ChiMode::Search
            },
            timeout: Some(Duration::from_secs(self.solver_timeout_seconds)),
            density_cap: DEFAULT_DENSITY_CAP,
        }
    }

    pub(crate) fn thread_pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.effective_workers()?)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_gets_defaults() {
        let cfg = ScanConfig::from_json(
            r#"{"enumSpec": {"nMin": 1, "nMax": 4, "maxMu": 2, "maxEdgeCopies": 6}}"#,
        )
        .unwrap();
        assert_eq!(cfg.workers, 1);
        assert_eq!(cfg.solver_timeout_seconds, 60);
        assert!(cfg.gs_check && cfg.steffen_check && cfg.thm13_check);
        assert_eq!(cfg.random_graphs, 1000);
    }

    #[test]
    fn rejects_bad_values() {
        for text in [
            r#"{"enumSpec": {"nMin": 1, "nMax": 4, "maxMu": 2, "maxEdgeCopies": 6}, "workers": 0}"#,
            r#"{"enumSpec": {"nMin": 1, "nMax": 4, "maxMu": 2, "maxEdgeCopies": 6}, "solverTimeoutSeconds": 0}"#,
            r#"{"enumSpec": {"nMin": 1, "nMax": 11, "maxMu": 2, "maxEdgeCopies": 6}}"#,
            r#"{"enumSpec": {"nMin": 1, "nMax": 4, "maxMu": 2, "maxEdgeCopies": 6}, "checkpointPath": "x"}"#,
            r#"{"enumSpec": {"nMin": 1, "nMax": 4, "maxMu": 2, "maxEdgeCopies": 6}, "bogus": 1}"#,
            r#"{"workers": 2}"#,
        ] {
            assert!(
                matches!(ScanConfig::from_json(text), Err(Error::Config(_))),
                "{text}"
            );
        }
    }
}
