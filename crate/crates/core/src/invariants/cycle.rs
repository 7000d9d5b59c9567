//! Girth, shortest cycles and cycle enumeration on the underlying simple graph.
//!
//! Parallel edges never form cycles here: the girth is the length of a
//! shortest cycle of length at least 3 in the underlying simple graph, and it
//! is infinite for forests.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Multigraph, SimpleGraphView};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Girth {
    pub fn value(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    /// `girth >= bound`, treating infinity as larger than every integer.
    pub fn at_least(self, bound: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match Option::<u32>::deserialize(d)? {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        })
    }
}

/// A cycle `v_0 v_1 ... v_{k-1}` of the underlying simple graph, `k >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleSeq {
    vertices: Vec<usize>,
}

impl CycleSeq {
    /// Validates distinctness, length and adjacency (including wraparound).
    pub fn new(view: &SimpleGraphView, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::BadParameter(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= view.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: view.n(),
                });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::BadParameter(format!("vertex {v} repeated in cycle")));
            }
            seen |= 1 << v;
        }
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !view.has_edge(a, b) {
                return Err(Error::BadParameter(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(CycleSeq { vertices })
    }

    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        CycleSeq { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Consecutive pairs `(v_i, v_{i+1})`, wrapping around.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Rotated to start at the smallest vertex and reflected so the second
    /// entry is the smaller of its two neighbors.
    pub fn canonical(&self) -> CycleSeq {
        let k = self.vertices.len();
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        let fwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + i) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + k - i) % k]).collect();
        CycleSeq {
            vertices: fwd.min(bwd),
        }
    }
}

/// Girth of a multigraph, computed on its underlying simple graph.
pub fn girth(g: &Multigraph) -> Girth {
    let view = g.underlying_simple();
    girth_within(&view, view.all())
}

/// Girth of the subgraph induced on the vertex set `within`.
pub fn girth_within(view: &SimpleGraphView, within: u64) -> Girth {
    let adj = view.adjacency();
    let n = view.n();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in bits(within) {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in bits(adj[x] & within) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Breadth-first distances from `source` inside `allowed`.
fn distances(view: &SimpleGraphView, source: usize, allowed: u64) -> Vec<u32> {
    let adj = view.adjacency();
    let mut dist = vec![u32::MAX; view.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for y in bits(adj[x] & allowed) {
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// A minimum-length cycle of the subgraph induced on `within`.
///
/// Among all shortest cycles the one with the lexicographically least
/// canonical sequence (see [`CycleSeq::canonical`]) is returned.
pub fn shortest_cycle(view: &SimpleGraphView, within: u64) -> Option<CycleSeq> {
    let len = girth_within(view, within).value()? as usize;
    for s in bits(within) {
        let allowed = within & !((1u64 << s) - 1) & !(1u64 << s);
        let dist = distances(view, s, allowed | 1 << s);
        let mut path = vec![s];
        if extend_to_cycle(view, s, allowed, len, &dist, &mut path) {
            return Some(CycleSeq::from_trusted(path));
        }
    }
    None
}

/// Depth-first search for the lexicographically first cycle of length `len`
/// through `s` using only vertices in `allowed` (all larger than `s`).
fn extend_to_cycle(
    view: &SimpleGraphView,
    s: usize,
    allowed: u64,
    len: usize,
    dist: &[u32],
    path: &mut Vec<usize>,
) -> bool {
    let adj = view.adjacency();
    let last = *path.last().unwrap();
    if path.len() == len {
        return adj[last] >> s & 1 == 1 && path[1] < last;
    }
    let used = path.iter().fold(0u64, |m, &v| m | 1 << v);
    let remaining = (len - path.len()) as u32;
    for y in bits(adj[last] & allowed & !used) {
        // After stepping to y, `remaining - 1` more vertices and one closing edge.
        if dist[y] > remaining {
            continue;
        }
        path.push(y);
        if extend_to_cycle(view, s, allowed, len, dist, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Every cycle of the underlying simple graph with length at most `max_len`,
/// each once in canonical form, ordered by length and then lexicographically.
///
/// Fails with `InstanceTooLarge` once more than `cap` cycles are found.
pub fn all_cycles(view: &SimpleGraphView, max_len: usize, cap: usize) -> Result<Vec<CycleSeq>> {
    let adj = view.adjacency();
    let mut out = Vec::new();
    let mut path = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn walk(
        adj: &[u64],
        s: usize,
        allowed: u64,
        max_len: usize,
        cap: usize,
        path: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<CycleSeq>,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        if path.len() >= 3 && adj[last] >> s & 1 == 1 && path[1] < last {
            if out.len() >= cap {
                return Err(Error::InstanceTooLarge(format!(
                    "more than {cap} cycles in cycle enumeration"
                )));
            }
            out.push(CycleSeq::from_trusted(path.clone()));
        }
        if path.len() == max_len {
            return Ok(());
        }
        for y in bits(adj[last] & allowed & !used) {
            path.push(y);
            walk(adj, s, allowed, max_len, cap, path, used | 1 << y, out)?;
            path.pop();
        }
        Ok(())
    }

    for s in 0..view.n() {
        let allowed = view.all() & !((1u64 << s) | ((1u64 << s) - 1));
        path.clear();
        path.push(s);
        walk(adj, s, allowed, max_len, cap, &mut path, 1 << s, &mut out)?;
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(out)
}
