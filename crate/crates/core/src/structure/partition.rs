use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_of, Multigraph};
use crate::invariants::cycle::{girth_within, shortest_cycle, CycleSeq, Girth};

/// Vertex-disjoint cycles `C_1, ..., C_ℓ` peeled greedily, each shortest in
/// what remains of the underlying simple graph, plus the acyclic rest `V_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePartition {
    pub cycles: Vec<CycleSeq>,
    pub v0: Vec<usize>,
}

pub fn cycle_partition(g: &Multigraph) -> CyclePartition {
    let view = g.underlying_simple();
    let mut remaining = view.all();
    let mut cycles = Vec::new();
    while let Some(c) = shortest_cycle(&view, remaining) {
        remaining &= !c.mask();
        cycles.push(c);
    }
    CyclePartition {
        cycles,
        v0: bits(remaining).collect(),
    }
}

impl CyclePartition {
    /// Vertices still present when `C_h` (0-based) was peeled.
    pub fn stage_vertices(&self, n: usize, h: usize) -> Vec<usize> {
        let removed = self.cycles[..h].iter().fold(0u64, |m, c| m | c.mask());
        bits(crate::graph::full_mask(n) & !removed).collect()
    }

    pub fn v0_mask(&self) -> u64 {
        mask_of(&self.v0)
    }

    /// Re-checks every defining property against `g` from scratch.
    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        let view = g.underlying_simple();
        let fail = |msg: String| Err(Error::Internal(format!("invalid cycle partition: {msg}")));
        let mut covered = 0u64;
        let mut remaining = view.all();
        for (i, c) in self.cycles.iter().enumerate() {
            if CycleSeq::new(&view, c.vertices().to_vec()).is_err() {
                return fail(format!("C_{} is not a cycle", i + 1));
            }
            if c.mask() & covered != 0 {
                return fail(format!("C_{} overlaps an earlier cycle", i + 1));
            }
            if c.mask() & !remaining != 0 {
                return fail(format!("C_{} leaves the vertex set", i + 1));
            }
            if girth_within(&view, remaining) != Girth::Finite(c.len() as u32) {
                return fail(format!("C_{} is not shortest in its stage", i + 1));
            }
            covered |= c.mask();
            remaining &= !c.mask();
        }
        if girth_within(&view, remaining).is_finite() {
            return fail("remainder contains a cycle".into());
        }
        if self.v0_mask() != remaining || self.v0.len() != remaining.count_ones() as usize {
            return fail("V0 is not the remainder".into());
        }
        Ok(())
    }
}
