//! Fans from the acyclic remainder of a cycle partition onto a cycle.
//!
//! A `t`-fan from `v0 ∈ V_0` to `C_h` is a union of `t` paths that share only
//! `v0`, run through `V_0`, and each end at a distinct vertex of `C_h`. Its
//! tree part `T^0` is the fan minus those endpoints. When `C_h` is shortest
//! in its peeling stage, consecutive fan paths together with the cycle arc
//! between their ends form cycles at least as long as `C_h`, which forces
//! `|T^0| ≥ (t - 1)|C_h|/2 - (t - 1)`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Multigraph};
use crate::invariants::cycle::CycleSeq;
use crate::structure::partition::CyclePartition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Fan {
    pub apex: usize,
    /// 0-based index into the partition's cycle list.
    pub target_cycle: usize,
    /// Each path runs from the apex to its endpoint on the target cycle.
    pub paths: Vec<Vec<usize>>,
}

impl Fan {
    pub fn t(&self) -> usize {
        self.paths.len()
    }

    /// `T^0`: all fan vertices except the endpoints on the cycle, sorted.
    pub fn tree_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .paths
            .iter()
            .flat_map(|p| p[..p.len().saturating_sub(1)].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Checks the defining properties against a partition of `g`.
    pub fn validate(&self, g: &Multigraph, partition: &CyclePartition) -> Result<()> {
        let bad = |m: &str| Err(Error::Internal(format!("invalid fan: {m}")));
        let Some(cycle) = partition.cycles.get(self.target_cycle) else {
            return bad("target cycle out of range");
        };
        let v0 = partition.v0_mask();
        let cmask = cycle.mask();
        let view = g.underlying_simple();
        if v0 >> self.apex & 1 == 0 {
            return bad("apex outside V0");
        }
        let mut interior_seen = 0u64;
        let mut ends_seen = 0u64;
        for path in &self.paths {
            if path.len() < 2 || path[0] != self.apex {
                return bad("path does not start at the apex");
            }
            let end = *path.last().unwrap();
            if cmask >> end & 1 == 0 || ends_seen >> end & 1 == 1 {
                return bad("path endpoints must be distinct cycle vertices");
            }
            ends_seen |= 1 << end;
            for w in path.windows(2) {
                if !view.has_edge(w[0], w[1]) {
                    return bad("consecutive path vertices not adjacent");
                }
            }
            for &x in &path[1..path.len() - 1] {
                if v0 >> x & 1 == 0 || interior_seen >> x & 1 == 1 {
                    return bad("interiors must be disjoint and inside V0");
                }
                interior_seen |= 1 << x;
            }
        }
        Ok(())
    }
}

/// A fan from `apex` to cycle `h` with the largest possible number of paths.
///
/// Computed as a maximum flow with unit vertex capacities: `V_0` vertices are
/// split into in/out copies, cycle vertices feed a common sink.
pub fn max_fan(
    g: &Multigraph,
    partition: &CyclePartition,
    apex: usize,
    h: usize,
) -> Result<Option<Fan>> {
    let v0 = partition.v0_mask();
    if apex >= g.n() || v0 >> apex & 1 == 0 {
        return Err(Error::VertexNotInV0(apex));
    }
    let cycle = partition
        .cycles
        .get(h)
        .ok_or_else(|| Error::BadParameter(format!("no cycle with index {h}")))?;
    let cmask = cycle.mask();
    let adj = g.adjacency_masks();
    let n = g.n();
    // node 2x = x_in (or the cycle vertex x), 2x+1 = x_out, 2n = sink
    let size = 2 * n + 1;
    let sink = 2 * n;
    let source = 2 * apex + 1;
    let mut cap = vec![vec![0i32; size]; size];
    for x in bits(v0) {
        if x != apex {
            cap[2 * x][2 * x + 1] = 1;
        }
        for y in bits(adj[x] & v0) {
            cap[2 * x + 1][2 * y] = 1;
        }
        for y in bits(adj[x] & cmask) {
            cap[2 * x + 1][2 * y] = 1;
        }
    }
    for y in bits(cmask) {
        cap[2 * y][sink] = 1;
    }

    let mut flow = vec![vec![0i32; size]; size];
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..size {
                if prev[b] == usize::MAX && cap[a][b] - flow[a][b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            flow[a][b] += 1;
            flow[b][a] -= 1;
            b = a;
        }
    }

    let mut paths = Vec::new();
    for first in 0..size {
        if flow[source][first] != 1 {
            continue;
        }
        let mut path = vec![apex];
        let mut node = first;
        loop {
            let vertex = node / 2;
            if path.last() != Some(&vertex) {
                path.push(vertex);
            }
            if cmask >> vertex & 1 == 1 {
                break;
            }
            node = (0..size)
                .find(|&b| flow[node][b] == 1)
                .expect("flow is conserved along the path");
        }
        paths.push(path);
    }
    if paths.is_empty() {
        return Ok(None);
    }
    Ok(Some(Fan {
        apex,
        target_cycle: h,
        paths,
    }))
}

/// `|T^0| ≥ (t - 1)|C_h|/2 - (t - 1)`.
pub fn fan_bound_check(fan: &Fan, cycle: &CycleSeq) -> bool {
    let t = fan.t() as i64;
    if t == 0 {
        return true;
    }
    let tree = fan.tree_vertices().len() as i64;
    2 * tree >= (t - 1) * cycle.len() as i64 - 2 * (t - 1)
}
