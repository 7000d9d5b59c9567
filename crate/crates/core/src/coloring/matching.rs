//! Structure of critical graphs whose chromatic index is at least `Δ + 2`.
//!
//! For such a graph `G` on `n` vertices, `χ' = Γ`, so `n` is odd and any
//! `(χ' - 1)`-coloring of `G - e` splits the edges into classes of exactly
//! `(n - 1)/2` edges, each missing a single vertex. Counting how often each
//! vertex is missed gives, for every `v`,
//!
//! ```text
//! d(v) = Σ_{w ≠ v} (χ' - 1 - d(w)) + 2
//! ```
//!
//! and, when `χ' = Δ + ⌈μ/⌊g/2⌋⌉ ≥ Δ + 2` for an integer `5 ≤ g ≤ n`, the
//! minimum degree satisfies `δ ≥ nμ/g + 1` with equality only if `μ = g`.

use serde::{Deserialize, Serialize};

use crate::coloring::chromatic::{chromatic_index_with, ChromaticOptions};
use crate::coloring::critical::is_critical_given_chi;
use crate::coloring::solver::{decide, Decision};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingDecomposition {
    pub classes: Vec<Vec<(usize, usize)>>,
    /// For each class, the one vertex it does not cover.
    #[serde(rename = "missedVertex")]
    pub missed_vertex: Vec<usize>,
}

/// Checks the shared hypotheses and returns `χ'(G)`.
fn require_critical_above_delta_plus_one(g: &Multigraph, opts: &ChromaticOptions) -> Result<u32> {
    if g.edge_count() == 0 {
        return Err(Error::PreconditionFailed("graph has no edges".into()));
    }
    let chi = chromatic_index_with(g, opts)?.chi;
    let delta = g.max_degree();
    if chi < delta + 2 {
        return Err(Error::PreconditionFailed(format!(
            "chromatic index {chi} is below Δ + 2 = {}",
            delta + 2
        )));
    }
    if !is_critical_given_chi(g, chi, opts)? {
        return Err(Error::PreconditionFailed("graph is not critical".into()));
    }
    Ok(chi)
}

pub fn near_perfect_matching_decomposition(
    g: &Multigraph,
    edge: (usize, usize),
) -> Result<MatchingDecomposition> {
    near_perfect_matching_decomposition_with(g, edge, &ChromaticOptions::default())
}

/// Splits `E(G - e)` into `χ' - 1` near-perfect matchings.
///
/// A failure other than `PreconditionFailed` means the coloring found did
/// not have the forced class sizes, which contradicts the structure theorem.
pub fn near_perfect_matching_decomposition_with(
    g: &Multigraph,
    (u, v): (usize, usize),
    opts: &ChromaticOptions,
) -> Result<MatchingDecomposition> {
    if g.multiplicity(u, v) == 0 {
        return Err(Error::BadParameter(format!("{{{u},{v}}} is not an edge")));
    }
    if g.n() % 2 == 0 {
        return Err(Error::PreconditionFailed(format!(
            "vertex count {} is even",
            g.n()
        )));
    }
    let chi = require_critical_above_delta_plus_one(g, opts)?;
    decompose_given_chi(g, (u, v), chi, opts)
}

/// The decomposition step alone, for a graph already known to be critical
/// with the given `χ' ≥ Δ + 2` and an odd number of vertices.
pub fn decompose_given_chi(
    g: &Multigraph,
    (u, v): (usize, usize),
    chi: u32,
    opts: &ChromaticOptions,
) -> Result<MatchingDecomposition> {
    let h = g.remove_edges(u, v, 1)?;
    let coloring = match decide(&h, chi - 1, opts.timeout)? {
        Decision::Colorable(c) => c,
        Decision::NotColorable => {
            return Err(Error::Internal(format!(
                "G - e is not {}-colorable although G is critical",
                chi - 1
            )))
        }
        Decision::TimedOut => return Err(Error::Timeout),
    };
    let half = (g.n() - 1) / 2;
    let classes = coloring.classes();
    let mut missed_vertex = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        if class.len() != half {
            return Err(Error::Internal(format!(
                "color class {} has {} edges, expected {half}",
                i + 1,
                class.len()
            )));
        }
        let covered = class.iter().fold(0u64, |m, &(a, b)| m | 1 << a | 1 << b);
        let missing = crate::graph::full_mask(g.n()) & !covered;
        debug_assert_eq!(missing.count_ones(), 1);
        missed_vertex.push(missing.trailing_zeros() as usize);
    }
    Ok(MatchingDecomposition {
        classes,
        missed_vertex,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinDegreeCheck {
    /// The integer `g` for which `χ' = Δ + ⌈μ/⌊g/2⌋⌉ ≥ Δ + 2` and `5 ≤ g ≤ n`.
    pub g: u32,
    /// `δ ≥ nμ/g + 1`.
    pub holds: bool,
    /// `δ = nμ/g + 1`.
    pub equality: bool,
    /// Equality only occurs with `μ = g`.
    pub equality_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeIdentityReport {
    pub chi: u32,
    /// `d(v) - [Σ_{w≠v} (χ' - 1 - d(w)) + 2]` for every vertex.
    pub residuals: Vec<i64>,
    /// `δ ≥ (n - 1)(χ' - 1 - Δ) + 2`.
    pub lower_bound_holds: bool,
    /// Empty when no admissible `g` exists (the check does not apply).
    pub min_degree_checks: Vec<MinDegreeCheck>,
}

impl DegreeIdentityReport {
    pub fn min_degree_applicable(&self) -> bool {
        !self.min_degree_checks.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.residuals.iter().all(|&r| r == 0)
            && self.lower_bound_holds
            && self
                .min_degree_checks
                .iter()
                .all(|c| c.holds && c.equality_consistent)
    }
}

pub fn degree_identity_check(g: &Multigraph) -> Result<DegreeIdentityReport> {
    degree_identity_check_with(g, &ChromaticOptions::default())
}

pub fn degree_identity_check_with(
    g: &Multigraph,
    opts: &ChromaticOptions,
) -> Result<DegreeIdentityReport> {
    let chi = require_critical_above_delta_plus_one(g, opts)?;
    Ok(degree_identity_report(g, chi))
}

/// The arithmetic part of [`degree_identity_check`], for a graph already
/// known to be critical with the given `χ' ≥ Δ + 2`.
pub fn degree_identity_report(g: &Multigraph, chi: u32) -> DegreeIdentityReport {
    let n = g.n();
    let deg: Vec<i64> = g.degrees().iter().map(|&d| d as i64).collect();
    let chi_i = chi as i64;
    let slack_total: i64 = deg.iter().map(|&d| chi_i - 1 - d).sum();
    let residuals = (0..n)
        .map(|v| {
            let others = slack_total - (chi_i - 1 - deg[v]);
            deg[v] - (others + 2)
        })
        .collect();

    let delta = g.max_degree() as i64;
    let min_deg = g.min_degree() as i64;
    let lower_bound_holds = min_deg >= (n as i64 - 1) * (chi_i - 1 - delta) + 2;

    let mu = g.max_multiplicity();
    let mut min_degree_checks = Vec::new();
    for girth_param in 5..=n as u32 {
        let term = mu.div_ceil(girth_param / 2);
        if chi as i64 != delta + term as i64 || term < 2 {
            continue;
        }
        // δ ≥ nμ/g + 1  ⇔  gδ ≥ nμ + g
        let lhs = girth_param as i64 * min_deg;
        let rhs = n as i64 * mu as i64 + girth_param as i64;
        min_degree_checks.push(MinDegreeCheck {
            g: girth_param,
            holds: lhs >= rhs,
            equality: lhs == rhs,
            equality_consistent: lhs != rhs || mu == girth_param,
        });
    }
    DegreeIdentityReport {
        chi,
        residuals,
        lower_bound_holds,
        min_degree_checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::families::{mu_complete, mu_cycle};

    #[test]
    fn mu_cycle_decomposes() {
        let g = mu_cycle(5, 3).unwrap();
        let d = near_perfect_matching_decomposition(&g, (0, 1)).unwrap();
        assert_eq!(d.classes.len(), 7);
        assert!(d.classes.iter().all(|c| c.len() == 2));
        assert_eq!(d.missed_vertex.len(), 7);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            near_perfect_matching_decomposition(&mu_cycle(5, 1).unwrap(), (0, 1)),
            Err(Error::PreconditionFailed(_))
        ));
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5, 3)).collect();
        edges.push((0, 5, 1));
        let even = Multigraph::build(6, &edges).unwrap();
        assert!(matches!(
            near_perfect_matching_decomposition(&even, (0, 1)),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            near_perfect_matching_decomposition(&mu_cycle(5, 3).unwrap(), (0, 2)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            degree_identity_check(&mu_cycle(7, 1).unwrap()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn mu_cycle_degree_identity() {
        let r = degree_identity_check(&mu_cycle(5, 3).unwrap()).unwrap();
        assert_eq!(r.chi, 8);
        assert_eq!(r.residuals, vec![0; 5]);
        assert!(r.lower_bound_holds);
        // g = 5: χ' = 6 + ⌈3/2⌉ = 8, δ = 6 ≥ 5·3/5 + 1 = 4.
        assert_eq!(
            r.min_degree_checks,
            vec![MinDegreeCheck {
                g: 5,
                holds: true,
                equality: false,
                equality_consistent: true
            }]
        );
        assert!(r.passes());
    }

    #[test]
    fn five_fold_triangle_identity() {
        let r = degree_identity_check(&mu_complete(3, 5).unwrap()).unwrap();
        assert_eq!(r.chi, 15);
        assert_eq!(r.residuals, vec![0; 3]);
        assert!(!r.min_degree_applicable());
    }
}
