use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coloring::chromatic::{chromatic_index_with, ChromaticOptions};
use crate::coloring::critical::is_critical_given_chi;
use crate::error::{Error, Result};
use crate::generate::canon::CanonicalForm;
use crate::graph::Multigraph;
use crate::invariants::cycle::{girth, Girth};
use crate::invariants::density::density_with_cap;
use crate::invariants::steffen::{steffen_bound, steffen_value};
use crate::scan::config::ScanConfig;
use crate::structure::ring::{find_ring_subgraph_with_chi_with, RingSubgraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Timeout,
    /// No coloring question was asked (all checks disabled).
    Skipped,
}

/// One report line. Fields that depend on a solver run are `null` when it
/// timed out or was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(rename = "graphKey")]
    pub graph_key: CanonicalForm,
    pub n: usize,
    pub m: u64,
    #[serde(rename = "Delta")]
    pub max_degree: u32,
    #[serde(rename = "delta")]
    pub min_degree: u32,
    pub mu: u32,
    pub girth: Girth,
    pub gamma: u64,
    pub chi: Option<u32>,
    #[serde(rename = "steffenBound")]
    pub steffen_bound: u32,
    #[serde(rename = "achievesBound")]
    pub achieves_bound: Option<bool>,
    #[serde(rename = "isCritical")]
    pub is_critical: Option<bool>,
    #[serde(rename = "chiGEDeltaPlus2")]
    pub chi_ge_delta_plus2: Option<bool>,
    /// `null` unless the main theorem's hypotheses hold.
    #[serde(rename = "ringFound")]
    pub ring_found: Option<bool>,
    #[serde(rename = "ringWitness")]
    pub ring_witness: Option<RingSubgraph>,
    pub status: Status,
}

/// Whether the main theorem applies with girth parameter `girth_param`:
/// `girth_param ≥ 5`, `g(G) ≥ girth_param`, `μ ≥ ⌊girth_param/2⌋ + 1` and
/// `χ' = Δ + ⌈μ/⌊girth_param/2⌋⌉`.
pub fn thm13_gate(g: &Multigraph, chi: u32, girth_param: u32) -> bool {
    let mu = g.max_multiplicity();
    girth_param >= 5
        && girth(g).at_least(girth_param)
        && mu > girth_param / 2
        && chi == steffen_value(g.max_degree(), mu, Girth::Finite(girth_param))
}

/// Evaluates one graph under `config`.
pub fn evaluate(
    key: CanonicalForm,
    g: &Multigraph,
    config: &ScanConfig,
    opts: &ChromaticOptions,
) -> Result<ScanRecord> {
    let gamma = density_with_cap(g, opts.density_cap)?.gamma;
    let mut record = ScanRecord {
        graph_key: key,
        n: g.n(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        mu: g.max_multiplicity(),
        girth: girth(g),
        gamma,
        chi: None,
        steffen_bound: steffen_bound(g),
        achieves_bound: None,
        is_critical: None,
        chi_ge_delta_plus2: None,
        ring_found: None,
        ring_witness: None,
        status: Status::Ok,
    };
    if !(config.gs_check || config.steffen_check || config.thm13_check) {
        record.status = Status::Skipped;
        return Ok(record);
    }
    let chi = match chromatic_index_with(g, opts) {
        Ok(c) => c.chi,
        Err(Error::Timeout) => {
            record.status = Status::Timeout;
            return Ok(record);
        }
        Err(e) => return Err(e),
    };
    record.chi = Some(chi);
    record.achieves_bound = Some(chi == record.steffen_bound);
    record.chi_ge_delta_plus2 = Some(chi >= record.max_degree + 2);
    record.is_critical = match g.edge_count() {
        0 => Some(false),
        _ => match is_critical_given_chi(g, chi, opts) {
            Ok(c) => Some(c),
            Err(Error::Timeout) => {
                record.status = Status::Timeout;
                None
            }
            Err(e) => return Err(e),
        },
    };
    if config.thm13_check && thm13_gate(g, chi, config.enum_spec.girth_min) {
        match find_ring_subgraph_with_chi_with(g, chi, opts) {
            Ok(ring) => {
                record.ring_found = Some(ring.is_some());
                record.ring_witness = ring;
            }
            Err(Error::Timeout) => record.status = Status::Timeout,
            Err(e) => return Err(e),
        }
    }
    Ok(record)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violations {
    /// `χ' > Δ + ⌈μ/⌊g/2⌋⌉`.
    pub steffen: u64,
    /// `χ' ≥ Δ + 2` but `χ' ≠ Γ`.
    pub goldberg_seymour: u64,
    /// Hypotheses of the main theorem hold but no ring was found.
    pub thm13: u64,
}

impl Violations {
    pub fn total(&self) -> u64 {
        self.steffen + self.goldberg_seymour + self.thm13
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanSummary {
    pub total: u64,
    /// Records carried over from a checkpoint.
    pub resumed: u64,
    pub timeouts: u64,
    pub skipped: u64,
    pub bound_achievers: u64,
    pub delta_plus2_achievers: u64,
    pub critical: u64,
    pub critical_delta_plus2: u64,
    pub thm13_applicable: u64,
    pub ring_found: u64,
    pub violations: Violations,
    /// Observed `(Δ, μ, g)` for bound-achieving graphs with a cycle.
    pub attainment_triples: BTreeSet<(u32, u32, u32)>,
    pub interrupted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lemma_suite: Option<crate::scan::lemma::LemmaReport>,
}

impl ScanSummary {
    pub fn add(&mut self, r: &ScanRecord, config: &ScanConfig) {
        self.total += 1;
        match r.status {
            Status::Timeout => self.timeouts += 1,
            Status::Skipped => self.skipped += 1,
            Status::Ok => {}
        }
        let Some(chi) = r.chi else { return };
        if r.achieves_bound == Some(true) {
            self.bound_achievers += 1;
            if let Girth::Finite(g) = r.girth {
                self.attainment_triples.insert((r.max_degree, r.mu, g));
            }
        }
        let plus2 = r.chi_ge_delta_plus2 == Some(true);
        if plus2 {
            self.delta_plus2_achievers += 1;
        }
        if r.is_critical == Some(true) {
            self.critical += 1;
            if plus2 {
                self.critical_delta_plus2 += 1;
            }
        }
        if r.ring_found.is_some() {
            self.thm13_applicable += 1;
        }
        if r.ring_found == Some(true) {
            self.ring_found += 1;
        }
        if config.steffen_check && chi > r.steffen_bound {
            self.violations.steffen += 1;
        }
        if config.gs_check && plus2 && chi as u64 != r.gamma {
            self.violations.goldberg_seymour += 1;
        }
        if config.thm13_check && r.ring_found == Some(false) {
            self.violations.thm13 += 1;
        }
    }

    /// Theorem violations plus any lemma-suite violations.
    pub fn violation_count(&self) -> u64 {
        self.violations.total() + self.lemma_suite.as_ref().map_or(0, |l| l.total_violations)
    }
}
