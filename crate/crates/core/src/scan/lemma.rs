//! Property suites for the structure of critical graphs, shortest cycles
//! and fans.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::chromatic::{chromatic_index_with, ChromaticOptions};
use crate::coloring::critical::is_critical_given_chi;
use crate::coloring::matching::{decompose_given_chi, degree_identity_report, MinDegreeCheck};
use crate::coloring::solver::{validate_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::generate::canon::canonical_form;
use crate::generate::enumerate::enumerate_multigraphs;
use crate::generate::families::{mu_complete, mu_cycle};
use crate::generate::random::random_corpus;
use crate::graph::Multigraph;
use crate::invariants::short_cycle::short_cycle_report;
use crate::scan::config::ScanConfig;
use crate::structure::fan::{fan_bound_check, max_fan};
use crate::structure::partition::cycle_partition;

/// At most this many violation descriptions are kept in a report.
const MAX_EXAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Lemma22Result {
    pub graph_key: String,
    pub source: String,
    pub n: usize,
    pub chi: u32,
    #[serde(rename = "Delta")]
    pub max_degree: u32,
    pub n_odd: bool,
    /// Pairs `{u, v}` for which `G - uv` was decomposed. Copies of one pair
    /// are interchangeable, so one decomposition per pair covers every copy.
    pub pairs_decomposed: usize,
    pub decomposition_failures: usize,
    pub residuals_zero: bool,
    pub lower_bound_holds: bool,
    pub min_degree_checks: Vec<MinDegreeCheck>,
}

impl Lemma22Result {
    pub fn passes(&self) -> bool {
        self.n_odd
            && self.decomposition_failures == 0
            && self.residuals_zero
            && self.lower_bound_holds
            && self
                .min_degree_checks
                .iter()
                .all(|c| c.holds && c.equality_consistent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Lemma22Outcome {
    NotApplicable { reason: String },
    Checked(Lemma22Result),
}

/// Runs every check on `g` if it is critical with `χ' ≥ Δ + 2`.
pub fn lemma22_check(
    g: &Multigraph,
    source: &str,
    opts: &ChromaticOptions,
) -> Result<Lemma22Outcome> {
    let na = |reason: String| Ok(Lemma22Outcome::NotApplicable { reason });
    if g.edge_count() == 0 {
        return na("no edges".into());
    }
    let chi = chromatic_index_with(g, opts)?.chi;
    let delta = g.max_degree();
    if chi < delta + 2 {
        return na(format!(
            "chromatic index {chi} is below Δ + 2 = {}",
            delta + 2
        ));
    }
    if !is_critical_given_chi(g, chi, opts)? {
        return na("not critical".into());
    }
    let n_odd = g.n() % 2 == 1;
    let mut failures = 0;
    if n_odd {
        for p in g.pairs() {
            let ok = match decompose_given_chi(g, (p.u, p.v), chi, opts) {
                Ok(d) => {
                    let rest = g.remove_edges(p.u, p.v, 1)?;
                    let coloring = EdgeColoring::from_classes(chi - 1, &d.classes);
                    d.classes.len() == (chi - 1) as usize
                        && validate_coloring(&rest, &coloring).unwrap_or(false)
                }
                Err(Error::Internal(_)) => false,
                Err(e) => return Err(e),
            };
            if !ok {
                failures += 1;
            }
        }
    }
    let identity = degree_identity_report(g, chi);
    Ok(Lemma22Outcome::Checked(Lemma22Result {
        graph_key: canonical_form(g)?.to_hex(),
        source: source.to_string(),
        n: g.n(),
        chi,
        max_degree: delta,
        n_odd,
        pairs_decomposed: if n_odd { g.pairs().len() } else { 0 },
        decomposition_failures: failures,
        residuals_zero: identity.residuals.iter().all(|&r| r == 0),
        lower_bound_holds: identity.lower_bound_holds,
        min_degree_checks: identity.min_degree_checks,
    }))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Lemma22Section {
    /// Enumerated graphs examined.
    pub enumerated: u64,
    pub not_applicable: u64,
    pub results: Vec<Lemma22Result>,
    pub violations: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RandomSection {
    pub graphs: u64,
    pub max_n: usize,
    pub max_mu: u32,
    pub partitions_verified: u64,
    pub partition_failures: u64,
    pub cycles: u64,
    /// Vertices or tuples examined per short-cycle clause.
    pub clause_checks: [u64; 4],
    pub clause_violations: [u64; 4],
    pub fans: u64,
    pub max_fan_t: usize,
    pub invalid_fans: u64,
    pub fan_bound_violations: u64,
    pub examples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaReport {
    pub seed: u64,
    pub lemma22: Lemma22Section,
    pub random: RandomSection,
    pub total_violations: u64,
}

/// Per-graph tallies from the random corpus, merged in corpus order.
#[derive(Default)]
struct RandomTally {
    verified: bool,
    cycles: u64,
    clause_checks: [u64; 4],
    clause_violations: [u64; 4],
    fans: u64,
    max_t: usize,
    invalid_fans: u64,
    bound_violations: u64,
    examples: Vec<String>,
}

fn random_tally(index: usize, g: &Multigraph) -> Result<RandomTally> {
    let mut t = RandomTally::default();
    let p = cycle_partition(g);
    if let Err(e) = p.verify(g) {
        t.examples.push(format!("graph {index}: {e}"));
        return Ok(t);
    }
    t.verified = true;
    for (h, cycle) in p.cycles.iter().enumerate() {
        t.cycles += 1;
        let stage = p.stage_vertices(g.n(), h);
        let report = match short_cycle_report(g, cycle, &stage) {
            Ok(r) => r,
            Err(Error::NotShortestCycle) => {
                t.verified = false;
                t.examples
                    .push(format!("graph {index}: C_{} not shortest", h + 1));
                continue;
            }
            Err(e) => return Err(e),
        };
        for i in 0..4 {
            t.clause_checks[i] += report.checked[i];
        }
        for v in &report.violations {
            t.clause_violations[v.clause as usize - 1] += 1;
            t.examples.push(format!(
                "graph {index}: clause {} at {:?} on C_{}",
                v.clause,
                v.vertices,
                h + 1
            ));
        }
        for &apex in &p.v0 {
            let Some(fan) = max_fan(g, &p, apex, h)? else {
                continue;
            };
            t.fans += 1;
            t.max_t = t.max_t.max(fan.t());
            if fan.validate(g, &p).is_err() {
                t.invalid_fans += 1;
                t.examples.push(format!(
                    "graph {index}: invalid fan from {apex} to C_{}",
                    h + 1
                ));
            }
            if !fan_bound_check(&fan, cycle) {
                t.bound_violations += 1;
                t.examples.push(format!(
                    "graph {index}: {}-fan from {apex} to C_{} has |T0| = {}",
                    fan.t(),
                    h + 1,
                    fan.tree_vertices().len()
                ));
            }
        }
    }
    Ok(t)
}

/// The Lemma 2.2 checks over the enumeration in `config` (plus a few named
/// families) and the short-cycle and fan checks over a seeded random corpus.
pub fn run_lemma_suite(config: &ScanConfig, seed: u64) -> Result<LemmaReport> {
    config.validate()?;
    let pool = config.thread_pool()?;
    let opts = config.chromatic_options();
    pool.install(|| {
        let mut lemma22 = Lemma22Section::default();
        let enumerated = enumerate_multigraphs(&config.enum_spec)?;
        lemma22.enumerated = enumerated.len() as u64;
        let outcomes: Vec<Lemma22Outcome> = enumerated
            .par_iter()
            .map(|e| lemma22_check(&e.graph, "enumeration", &opts))
            .collect::<Result<_>>()?;
        let families = [
            ("3C_5", mu_cycle(5, 3)?),
            ("3K_3", mu_complete(3, 3)?),
            ("5K_3", mu_complete(3, 5)?),
        ];
        let mut all = outcomes;
        for (name, g) in &families {
            all.push(lemma22_check(g, name, &opts)?);
        }
        for o in all {
            match o {
                Lemma22Outcome::NotApplicable { .. } => lemma22.not_applicable += 1,
                Lemma22Outcome::Checked(r) => {
                    if !r.passes() {
                        lemma22.violations += 1;
                    }
                    lemma22.results.push(r);
                }
            }
        }

        let corpus = random_corpus(
            seed,
            config.random_graphs,
            config.random_max_n,
            config.random_max_mu,
        );
        let tallies: Vec<RandomTally> = corpus
            .par_iter()
            .enumerate()
            .map(|(i, g)| random_tally(i, g))
            .collect::<Result<_>>()?;
        let mut random = RandomSection {
            graphs: corpus.len() as u64,
            max_n: config.random_max_n,
            max_mu: config.random_max_mu,
            ..Default::default()
        };
        for t in tallies {
            if t.verified {
                random.partitions_verified += 1;
            } else {
                random.partition_failures += 1;
            }
            random.cycles += t.cycles;
            for i in 0..4 {
                random.clause_checks[i] += t.clause_checks[i];
                random.clause_violations[i] += t.clause_violations[i];
            }
            random.fans += t.fans;
            random.max_fan_t = random.max_fan_t.max(t.max_t);
            random.invalid_fans += t.invalid_fans;
            random.fan_bound_violations += t.bound_violations;
            for e in t.examples {
                if random.examples.len() < MAX_EXAMPLES {
                    random.examples.push(e);
                }
            }
        }
        let total_violations = lemma22.violations
            + random.partition_failures
            + random.clause_violations.iter().sum::<u64>()
            + random.invalid_fans
            + random.fan_bound_violations;
        Ok(LemmaReport {
            seed,
            lemma22,
            random,
            total_violations,
        })
    })
}
