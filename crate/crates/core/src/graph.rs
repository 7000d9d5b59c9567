//! Loopless multigraphs with per-pair multiplicities.
//!
//! Vertices are the dense integers `0..n`. A graph stores one [`Pair`] per
//! adjacent vertex pair together with its multiplicity; parallel copies of a
//! pair are addressed by `(pair, copy index)` where needed. Graphs are
//! immutable: every editing operation returns a new value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count supported. Adjacency is kept in `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// An unordered vertex pair `{u, v}` with `u < v` and its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub u: usize,
    pub v: usize,
    pub mult: u32,
}

impl Pair {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    /// Sorted by `(u, v)`, every multiplicity at least 1.
    pairs: Vec<Pair>,
    degrees: Vec<u32>,
}

/// Degree and multiplicity summary of a multigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicInvariants {
    pub n: usize,
    pub m: u64,
    #[serde(rename = "Delta")]
    pub max_degree: u32,
    #[serde(rename = "delta")]
    pub min_degree: u32,
    pub mu: u32,
    #[serde(rename = "deltaSimple")]
    pub min_simple_degree: u32,
}

/// The underlying simple graph: `u ~ v` iff the pair has multiplicity at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraphView {
    n: usize,
    adj: Vec<u64>,
}

pub(crate) fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// Builds a graph from `(u, v, multiplicity)` triples. Repeated pairs accumulate.
    pub fn build(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InstanceTooLarge(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut acc: std::collections::BTreeMap<(usize, usize), u32> = Default::default();
        for &(u, v, m) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            if m == 0 {
                return Err(Error::NonPositiveMultiplicity);
            }
            *acc.entry(ordered(u, v)).or_insert(0) += m;
        }
        let pairs = acc
            .into_iter()
            .map(|((u, v), mult)| Pair { u, v, mult })
            .collect();
        Ok(Self::from_sorted_pairs(n, pairs))
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_pairs(n, Vec::new())
    }

    pub(crate) fn from_sorted_pairs(n: usize, pairs: Vec<Pair>) -> Self {
        debug_assert!(pairs
            .windows(2)
            .all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
        let mut degrees = vec![0u32; n];
        for p in &pairs {
            debug_assert!(p.u < p.v && p.v < n && p.mult >= 1);
            degrees[p.u] += p.mult;
            degrees[p.v] += p.mult;
        }
        Multigraph { n, pairs, degrees }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacent pairs in serialized order, `(min endpoint, max endpoint)`.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Total number of edge copies, `|E|`.
    pub fn edge_count(&self) -> u64 {
        self.pairs.iter().map(|p| p.mult as u64).sum()
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v || u >= self.n || v >= self.n {
            return 0;
        }
        let key = ordered(u, v);
        self.pairs
            .binary_search_by(|p| (p.u, p.v).cmp(&key))
            .map(|i| self.pairs[i].mult)
            .unwrap_or(0)
    }

    /// Maximum multiplicity over all pairs, `μ(G)`.
    pub fn max_multiplicity(&self) -> u32 {
        self.pairs.iter().map(|p| p.mult).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Neighbor bitsets of the underlying simple graph.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for p in &self.pairs {
            adj[p.u] |= 1 << p.v;
            adj[p.v] |= 1 << p.u;
        }
        adj
    }

    pub fn basic_invariants(&self) -> BasicInvariants {
        let adj = self.adjacency_masks();
        BasicInvariants {
            n: self.n,
            m: self.edge_count(),
            max_degree: self.max_degree(),
            min_degree: self.min_degree(),
            mu: self.max_multiplicity(),
            min_simple_degree: adj.iter().map(|a| a.count_ones()).min().unwrap_or(0),
        }
    }

    pub fn underlying_simple(&self) -> SimpleGraphView {
        SimpleGraphView {
            n: self.n,
            adj: self.adjacency_masks(),
        }
    }

    /// Removes `count` parallel copies of `{u, v}`; the pair disappears at 0.
    pub fn remove_edges(&self, u: usize, v: usize, count: u32) -> Result<Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        let available = self.multiplicity(u, v);
        if count > available {
            return Err(Error::NotEnoughParallelEdges {
                u,
                v,
                available,
                requested: count,
            });
        }
        let key = ordered(u, v);
        let pairs = self
            .pairs
            .iter()
            .filter_map(|p| {
                if (p.u, p.v) == key {
                    (p.mult > count).then(|| Pair {
                        mult: p.mult - count,
                        ..*p
                    })
                } else {
                    Some(*p)
                }
            })
            .collect();
        Ok(Self::from_sorted_pairs(self.n, pairs))
    }

    /// Returns a copy with `count` more parallel copies of `{u, v}`.
    pub fn add_edges(&self, u: usize, v: usize, count: u32) -> Result<Self> {
        let mut edges: Vec<_> = self.pairs.iter().map(|p| (p.u, p.v, p.mult)).collect();
        edges.push((u, v, count));
        Self::build(self.n, &edges)
    }

    /// Subgraph induced on `vertices`, relabeled `0..|S|` in ascending original order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            index[v] = i;
        }
        let mut pairs: Vec<Pair> = self
            .pairs
            .iter()
            .filter(|p| index[p.u] != usize::MAX && index[p.v] != usize::MAX)
            .map(|p| Pair {
                u: index[p.u],
                v: index[p.v],
                mult: p.mult,
            })
            .collect();
        pairs.sort_unstable();
        Ok(Self::from_sorted_pairs(sorted.len(), pairs))
    }

    /// Applies the vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadParameter("not a permutation".into()));
            }
        }
        let mut pairs: Vec<Pair> = self
            .pairs
            .iter()
            .map(|p| {
                let (u, v) = ordered(perm[p.u], perm[p.v]);
                Pair { u, v, mult: p.mult }
            })
            .collect();
        pairs.sort_unstable();
        Ok(Self::from_sorted_pairs(self.n, pairs))
    }

    /// Vertices of degree 0.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degrees[v] == 0).collect()
    }

    /// Drops isolated vertices, relabeling the rest in ascending order.
    pub fn without_isolated(&self) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degrees[v] > 0).collect();
        self.induced(&keep).expect("vertices are in range")
    }

    /// Vertex sets of the connected components that contain at least one edge.
    pub fn edge_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_masks();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 || adj[s] == 0 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let comps = self.edge_components();
        comps.len() == 1 && comps[0].len() == self.n
    }
}

impl SimpleGraphView {
    pub fn from_masks(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        SimpleGraphView { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Bitset of all vertices.
    pub fn all(&self) -> u64 {
        full_mask(self.n)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Iterates the set bits of a 128-bit mask in ascending order.
pub(crate) fn bits128(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}
