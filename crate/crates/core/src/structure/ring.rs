use serde::{Deserialize, Serialize};

use crate::coloring::chromatic::{chromatic_index_with, ChromaticOptions};
use crate::error::{Error, Result};
use crate::generate::families::ring;
use crate::graph::Multigraph;
use crate::invariants::cycle::{all_cycles, girth, CycleSeq};

/// Cycle enumeration cap used by the ring search.
pub const RING_CYCLE_CAP: usize = 1_000_000;

/// Whether the underlying simple graph is one cycle through every vertex.
pub fn is_ring_graph(g: &Multigraph) -> bool {
    let n = g.n();
    n >= 3
        && g.pairs().len() == n
        && g.is_connected()
        && (0..n).all(|v| g.underlying_simple().degree(v) == 2)
}

/// A ring graph sitting on a cycle of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSubgraph {
    pub cycle: CycleSeq,
    /// `multiplicities[i]` is the count on `cycle[i] -- cycle[i+1 mod len]`.
    pub multiplicities: Vec<u32>,
    pub chi: u32,
}

impl RingSubgraph {
    /// The ring relabeled onto `0..len` along the cycle.
    pub fn to_ring(&self) -> Result<Multigraph> {
        ring(self.cycle.len(), &self.multiplicities)
    }

    /// The ring as a subgraph on the host's `n` vertices.
    pub fn embedded(&self, n: usize) -> Result<Multigraph> {
        let edges: Vec<_> = self
            .cycle
            .edges()
            .zip(&self.multiplicities)
            .map(|((u, v), &m)| (u, v, m))
            .collect();
        Multigraph::build(n, &edges)
    }

    /// Whether every multiplicity fits inside `g`.
    pub fn fits_in(&self, g: &Multigraph) -> bool {
        self.cycle.len() == self.multiplicities.len()
            && self
                .cycle
                .edges()
                .zip(&self.multiplicities)
                .all(|((u, v), &m)| m >= 1 && m <= g.multiplicity(u, v))
    }
}

pub fn find_ring_subgraph_with_chi(g: &Multigraph, target: u32) -> Result<Option<RingSubgraph>> {
    find_ring_subgraph_with_chi_with(g, target, &ChromaticOptions::default())
}

/// First ring subgraph, in canonical cycle order, whose chromatic index is `target`.
///
/// For each cycle the maximal ring is tried first. If it overshoots, copies
/// are removed one at a time from a most-loaded pair until `χ'` reaches the
/// target, which it must hit exactly since one copy changes `χ'` by at most 1.
pub fn find_ring_subgraph_with_chi_with(
    g: &Multigraph,
    target: u32,
    opts: &ChromaticOptions,
) -> Result<Option<RingSubgraph>> {
    if target == 0 {
        return Err(Error::BadParameter("target must be at least 1".into()));
    }
    if !girth(g).is_finite() {
        return Ok(None);
    }
    let view = g.underlying_simple();
    let cycles = all_cycles(&view, g.n(), RING_CYCLE_CAP)?;
    for cycle in cycles {
        let mut mults: Vec<u32> = cycle.edges().map(|(u, v)| g.multiplicity(u, v)).collect();
        let mut chi = chromatic_index_with(&ring(cycle.len(), &mults)?, opts)?.chi;
        if chi < target {
            continue;
        }
        while chi > target {
            let (i, &top) = mults
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
                .expect("cycle has edges");
            if top <= 1 {
                break;
            }
            mults[i] -= 1;
            chi = chromatic_index_with(&ring(cycle.len(), &mults)?, opts)?.chi;
        }
        if chi == target {
            return Ok(Some(RingSubgraph {
                cycle,
                multiplicities: mults,
                chi,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic::{chromatic_index, ChiMode};
    use crate::generate::families::{mu_cycle, petersen};

    #[test]
    fn recognizes_rings() {
        assert!(is_ring_graph(&mu_cycle(5, 3).unwrap()));
        assert!(is_ring_graph(&ring(7, &[3, 1, 2, 1, 3, 1, 2]).unwrap()));
        assert!(!is_ring_graph(&petersen()));
        assert!(!is_ring_graph(&Multigraph::build(2, &[(0, 1, 4)]).unwrap()));
        let mut two: Vec<_> = (0..3).map(|i| (i, (i + 1) % 3, 1)).collect();
        two.extend((0..3).map(|i| (3 + i, 3 + (i + 1) % 3, 1)));
        assert!(!is_ring_graph(&Multigraph::build(6, &two).unwrap()));
    }

    #[test]
    fn mu_cycle_is_its_own_ring() {
        let g = mu_cycle(5, 3).unwrap();
        let r = find_ring_subgraph_with_chi(&g, 8).unwrap().unwrap();
        assert_eq!(r.cycle.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(r.multiplicities, vec![3; 5]);
        assert_eq!(r.embedded(5).unwrap(), g);
    }

    #[test]
    fn petersen_has_no_four_chromatic_ring() {
        assert_eq!(find_ring_subgraph_with_chi(&petersen(), 4).unwrap(), None);
        assert!(find_ring_subgraph_with_chi(&petersen(), 3)
            .unwrap()
            .is_some());
    }

    #[test]
    fn chord_graph_picks_the_pentagon() {
        let g = mu_cycle(5, 3).unwrap().add_edges(0, 2, 1).unwrap();
        let chi = chromatic_index(&g, ChiMode::Search).unwrap().chi;
        assert_eq!(chi, 8);
        let r = find_ring_subgraph_with_chi(&g, chi).unwrap().unwrap();
        assert_eq!(r.cycle.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(r.chi, 8);
        assert!(r.fits_in(&g));
    }

    #[test]
    fn descent_reaches_lower_targets() {
        let g = mu_cycle(5, 3).unwrap();
        for target in 3..=8 {
            let r = find_ring_subgraph_with_chi(&g, target).unwrap().unwrap();
            assert_eq!(r.chi, target);
            let check = chromatic_index(&r.to_ring().unwrap(), ChiMode::Search).unwrap();
            assert_eq!(check.chi, target);
        }
        assert_eq!(find_ring_subgraph_with_chi(&g, 9).unwrap(), None);
        assert!(find_ring_subgraph_with_chi(&g, 0).is_err());
    }
}
