//! Neighborhood constraints that a shortest cycle imposes on the vertices
//! around it.
//!
//! Let `C` be a shortest cycle of the subgraph induced on `W` and write
//! `N_C(v)` for the neighbors of `v` on `C`. For vertices of `W - V(C)`:
//!
//! 1. `|C| >= 5`: `|N_C(v)| <= 1` for every `v`;
//! 2. `|C| >= 7`: `|N_C(u)| + |N_C(v)| <= 1` for adjacent `u, v`;
//! 3. `|C| >= 8`: the five vertices of any path `v1..v5` see at most 2 cycle neighbors in total;
//! 4. `|C| >= 6`: the three vertices of any path `v1 v2 v3` see at most 2.
//!
//! Every clause is a theorem, so a reported violation is a bug elsewhere.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_of, Multigraph, SimpleGraphView};
use crate::invariants::cycle::{girth_within, CycleSeq, Girth};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortCycleViolation {
    pub clause: u8,
    pub vertices: Vec<usize>,
    #[serde(rename = "cycleNeighbors")]
    pub cycle_neighbors: u32,
}

/// Number of vertices or tuples examined per clause.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortCycleReport {
    pub checked: [u64; 4],
    pub violations: Vec<ShortCycleViolation>,
}

pub fn check_short_cycle_properties(
    g: &Multigraph,
    cycle: &CycleSeq,
    within: &[usize],
) -> Result<Vec<ShortCycleViolation>> {
    short_cycle_report(g, cycle, within).map(|r| r.violations)
}

pub fn short_cycle_report(
    g: &Multigraph,
    cycle: &CycleSeq,
    within: &[usize],
) -> Result<ShortCycleReport> {
    let view = g.underlying_simple();
    for &v in within {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    let within = mask_of(within);
    verify_shortest(&view, cycle, within)?;
    Ok(report_unchecked(&view, cycle, within))
}

fn verify_shortest(view: &SimpleGraphView, cycle: &CycleSeq, within: u64) -> Result<()> {
    let cmask = cycle.mask();
    let valid = cycle.len() >= 3
        && cmask.count_ones() as usize == cycle.len()
        && cmask & !within == 0
        && cycle.edges().all(|(a, b)| view.has_edge(a, b));
    if !valid || girth_within(view, within) != Girth::Finite(cycle.len() as u32) {
        return Err(Error::NotShortestCycle);
    }
    Ok(())
}

pub(crate) fn report_unchecked(
    view: &SimpleGraphView,
    cycle: &CycleSeq,
    within: u64,
) -> ShortCycleReport {
    let adj = view.adjacency();
    let cmask = cycle.mask();
    let outside = within & !cmask;
    let len = cycle.len();
    let on_cycle = |v: usize| (adj[v] & cmask).count_ones();
    let mut report = ShortCycleReport::default();

    if len >= 5 {
        for v in bits(outside) {
            report.checked[0] += 1;
            let k = on_cycle(v);
            if k > 1 {
                report.violations.push(ShortCycleViolation {
                    clause: 1,
                    vertices: vec![v],
                    cycle_neighbors: k,
                });
            }
        }
    }
    if len >= 7 {
        for u in bits(outside) {
            for v in bits(adj[u] & outside).filter(|&v| v > u) {
                report.checked[1] += 1;
                let k = on_cycle(u) + on_cycle(v);
                if k > 1 {
                    report.violations.push(ShortCycleViolation {
                        clause: 2,
                        vertices: vec![u, v],
                        cycle_neighbors: k,
                    });
                }
            }
        }
    }
    for (clause, path_len, min_cycle) in [(3u8, 5usize, 8usize), (4, 3, 6)] {
        if len < min_cycle {
            continue;
        }
        for path in simple_paths(adj, outside, path_len) {
            report.checked[clause as usize - 1] += 1;
            let k: u32 = path.iter().map(|&v| on_cycle(v)).sum();
            if k > 2 {
                report.violations.push(ShortCycleViolation {
                    clause,
                    vertices: path,
                    cycle_neighbors: k,
                });
            }
        }
    }
    report
}

/// Paths on exactly `len` distinct vertices inside `allowed`, each listed
/// once (first endpoint smaller than the last).
fn simple_paths(adj: &[u64], allowed: u64, len: usize) -> Vec<Vec<usize>> {
    fn grow(
        adj: &[u64],
        allowed: u64,
        len: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == len {
            if path[0] < path[len - 1] {
                out.push(path.clone());
            }
            return;
        }
        let used = path.iter().fold(0u64, |m, &v| m | 1 << v);
        let last = *path.last().unwrap();
        for y in bits(adj[last] & allowed & !used) {
            path.push(y);
            grow(adj, allowed, len, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in bits(allowed) {
        let mut path = vec![s];
        grow(adj, allowed, len, &mut path, &mut out);
    }
    out
}
