use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Multigraph};

/// Default largest vertex count for exhaustive odd-subset enumeration.
pub const DEFAULT_DENSITY_CAP: usize = 22;

/// The density `Γ(G)` together with an odd vertex set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityWitness {
    pub gamma: u64,
    #[serde(rename = "witnessSet")]
    pub witness: Vec<usize>,
}

/// `⌈2 |E(S)| / (|S| - 1)⌉` for an odd set of size at least 3.
pub fn density_ratio(edges: u64, size: usize) -> u64 {
    debug_assert!(size >= 3 && size % 2 == 1);
    let denom = size as u64 - 1;
    (2 * edges).div_ceil(denom)
}

pub fn density(g: &Multigraph) -> Result<DensityWitness> {
    density_with_cap(g, DEFAULT_DENSITY_CAP)
}

/// Exact density: maximum of [`density_ratio`] over all odd vertex sets of
/// size at least 3, using induced edge counts. The reported witness is the
/// lexicographically least maximizer (as a sorted vertex list).
pub fn density_with_cap(g: &Multigraph, cap: usize) -> Result<DensityWitness> {
    let n = g.n();
    if n > cap {
        return Err(Error::InstanceTooLarge(format!(
            "density enumeration over {n} vertices exceeds cap {cap}"
        )));
    }
    if n < 3 {
        return Ok(DensityWitness {
            gamma: 0,
            witness: Vec::new(),
        });
    }
    // rows[v][u] = mult{u, v}
    let mut rows = vec![vec![0u32; n]; n];
    for p in g.pairs() {
        rows[p.u][p.v] = p.mult;
        rows[p.v][p.u] = p.mult;
    }
    let adj = g.adjacency_masks();

    let total = 1usize << n;
    let mut induced = vec![0u32; total];
    let mut best_gamma = 0u64;
    let mut best_set = 0u64;
    let mut found = false;
    for set in 1..total {
        let low = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        let into: u32 = bits(adj[low] & rest as u64).map(|u| rows[low][u]).sum();
        let e = induced[rest] + into;
        induced[set] = e;
        let size = set.count_ones() as usize;
        if size < 3 || size % 2 == 0 {
            continue;
        }
        let ratio = density_ratio(e as u64, size);
        let set = set as u64;
        if !found
            || ratio > best_gamma
            || (ratio == best_gamma && lex_cmp(set, best_set) == Ordering::Less)
        {
            best_gamma = ratio;
            best_set = set;
            found = true;
        }
    }
    Ok(DensityWitness {
        gamma: best_gamma,
        witness: bits(best_set).collect(),
    })
}

/// Lexicographic order of two vertex sets viewed as ascending lists.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let x = diff.trailing_zeros();
    let above = if x >= 63 { 0 } else { !0u64 << (x + 1) };
    if a >> x & 1 == 1 {
        // `a` holds x where `b` holds something larger or has ended.
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}
