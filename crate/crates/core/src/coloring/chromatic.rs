use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::coloring::solver::{decide, Decision, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::invariants::density::{density_with_cap, DEFAULT_DENSITY_CAP};

/// Default per-`(G, k)` decision budget.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiMode {
    /// Linear ascent from `max(Δ, Γ)`.
    #[default]
    Search,
    /// When `Γ ≥ Δ + 2` the answer is `Γ` and only a `Γ`-coloring is sought.
    GsFastpath,
}

impl FromStr for ChiMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "search" => Ok(ChiMode::Search),
            "gs" | "gs-fastpath" => Ok(ChiMode::GsFastpath),
            other => Err(Error::BadParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChromaticOptions {
    pub mode: ChiMode,
    /// Budget for each individual `k`-colorability decision; `None` is unbounded.
    pub timeout: Option<Duration>,
    pub density_cap: usize,
}

impl Default for ChromaticOptions {
    fn default() -> Self {
        ChromaticOptions {
            mode: ChiMode::Search,
            timeout: Some(DEFAULT_TIMEOUT),
            density_cap: DEFAULT_DENSITY_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub chi: u32,
    pub witness: EdgeColoring,
    pub gamma: u64,
}

pub fn chromatic_index(g: &Multigraph, mode: ChiMode) -> Result<ChromaticIndex> {
    chromatic_index_with(
        g,
        &ChromaticOptions {
            mode,
            ..Default::default()
        },
    )
}

/// Exact chromatic index with a witness coloring.
///
/// The answer lies in `[max(Δ, Γ), Δ + μ]`; the search walks upward from the
/// lower end since proving a `k` infeasible is the expensive direction.
pub fn chromatic_index_with(g: &Multigraph, opts: &ChromaticOptions) -> Result<ChromaticIndex> {
    let gamma = density_with_cap(g, opts.density_cap)?.gamma;
    if g.edge_count() == 0 {
        return Ok(ChromaticIndex {
            chi: 0,
            witness: EdgeColoring::empty(0),
            gamma,
        });
    }
    let delta = g.max_degree();
    let upper = delta + g.max_multiplicity();
    let mut start = delta.max(gamma as u32);

    if opts.mode == ChiMode::GsFastpath && gamma >= delta as u64 + 2 {
        match decide(g, gamma as u32, opts.timeout)? {
            Decision::Colorable(witness) => {
                return Ok(ChromaticIndex {
                    chi: gamma as u32,
                    witness,
                    gamma,
                })
            }
            Decision::TimedOut => return Err(Error::Timeout),
            // Not expected; continue with the plain search above Γ.
            Decision::NotColorable => start = gamma as u32 + 1,
        }
    }

    for k in start..=upper {
        match decide(g, k, opts.timeout)? {
            Decision::Colorable(witness) => {
                return Ok(ChromaticIndex {
                    chi: k,
                    witness,
                    gamma,
                })
            }
            Decision::NotColorable => continue,
            Decision::TimedOut => return Err(Error::Timeout),
        }
    }
    Err(Error::Internal(format!(
        "no coloring with at most Δ + μ = {upper} colors"
    )))
}
