//! Exhaustive enumeration of non-isomorphic multigraphs.
//!
//! Simple underlying graphs are grown one edge at a time and deduplicated by
//! canonical key at every edge count. Since girth at least `g` is inherited
//! by subgraphs, edges closing a cycle shorter than `girth_min` are never
//! added. Each surviving simple graph `H` then receives every multiplicity
//! vector within the bounds, keeping one vector per orbit of the
//! automorphism group of `H` acting on its edges. Two multigraphs over the
//! same labeled `H` are isomorphic exactly when their vectors share an orbit,
//! so this yields one representative per isomorphism class.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::canon::{canonical_graph, CanonicalForm, CANON_MAX_VERTICES};
use crate::graph::{bits, Multigraph, Pair};
use crate::invariants::cycle::girth;

/// Bounds of an exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct EnumSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub max_mu: u32,
    /// Smallest admissible girth; 3 imposes no constraint.
    #[serde(default = "default_girth_min")]
    pub girth_min: u32,
    pub max_edge_copies: u32,
    /// Only connected graphs.
    #[serde(default)]
    pub connected: bool,
    /// Exclude graphs whose underlying simple graph is a forest.
    #[serde(default)]
    pub require_cycle: bool,
}

fn default_girth_min() -> u32 {
    3
}

impl EnumSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_max > CANON_MAX_VERTICES {
            return Err(Error::InstanceTooLarge(format!(
                "exhaustive enumeration supports n <= {CANON_MAX_VERTICES}, got {}",
                self.n_max
            )));
        }
        if self.n_min > self.n_max {
            return Err(Error::Config(format!(
                "nMin {} exceeds nMax {}",
                self.n_min, self.n_max
            )));
        }
        if self.max_mu < 1 {
            return Err(Error::Config("maxMu must be at least 1".into()));
        }
        if self.girth_min < 3 {
            return Err(Error::Config("girthMin must be at least 3".into()));
        }
        Ok(())
    }

    pub fn admits(&self, g: &Multigraph) -> bool {
        let gi = girth(g);
        (self.n_min..=self.n_max).contains(&g.n())
            && g.max_multiplicity() <= self.max_mu
            && g.edge_count() <= self.max_edge_copies as u64
            && gi.at_least(self.girth_min)
            && (!self.connected || g.is_connected())
            && (!self.require_cycle || gi.is_finite())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerated {
    pub key: CanonicalForm,
    /// The graph in its canonical labeling.
    pub graph: Multigraph,
}

/// All isomorphism classes admitted by `spec`, sorted by canonical key.
pub fn enumerate_multigraphs(spec: &EnumSpec) -> Result<Vec<Enumerated>> {
    spec.validate()?;
    let mut shapes = Vec::new();
    for n in spec.n_min..=spec.n_max {
        shapes.extend(
            simple_graphs(n, spec.girth_min, spec.max_edge_copies as usize)?
                .into_iter()
                .filter(|h| {
                    (!spec.connected || h.is_connected())
                        && (!spec.require_cycle || girth(h).is_finite())
                }),
        );
    }
    let mut out: Vec<Enumerated> = shapes
        .par_iter()
        .map(|h| weightings(h, spec.max_mu, spec.max_edge_copies))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// Non-isomorphic simple graphs on `n` vertices with girth at least
/// `girth_min` and at most `max_edges` edges, in canonical labeling.
pub fn simple_graphs(n: usize, girth_min: u32, max_edges: usize) -> Result<Vec<Multigraph>> {
    if n > CANON_MAX_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "simple graph enumeration supports n <= {CANON_MAX_VERTICES}"
        )));
    }
    let mut level: Vec<(CanonicalForm, Multigraph)> = vec![canonical_graph(&Multigraph::empty(n))?];
    let mut all: Vec<(CanonicalForm, Multigraph)> = level.clone();
    let top = max_edges.min(n * n.saturating_sub(1) / 2);
    for _ in 0..top {
        let children: Vec<(CanonicalForm, Multigraph)> = level
            .par_iter()
            .map(|(_, h)| extensions(h, girth_min))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut next: HashMap<CanonicalForm, Multigraph> = HashMap::new();
        for (k, g) in children {
            next.entry(k).or_insert(g);
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(all.into_iter().map(|(_, g)| g).collect())
}

/// Graphs obtained by adding one edge without creating a cycle shorter than `girth_min`.
fn extensions(h: &Multigraph, girth_min: u32) -> Result<Vec<(CanonicalForm, Multigraph)>> {
    let n = h.n();
    let adj = h.adjacency_masks();
    let mut out = Vec::new();
    for u in 0..n {
        // dist from u, capped at girth_min - 1
        let mut reach = 1u64 << u;
        let mut frontier = reach;
        let mut near = reach;
        for _ in 0..girth_min.saturating_sub(2) {
            let mut next = 0;
            for x in bits(frontier) {
                next |= adj[x];
            }
            frontier = next & !reach;
            reach |= next;
            near |= next;
        }
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 || near >> v & 1 == 1 {
                continue;
            }
            out.push(canonical_graph(&h.add_edges(u, v, 1)?)?);
        }
    }
    Ok(out)
}

/// Automorphisms of the underlying simple graph, each as a vertex permutation.
pub fn simple_automorphisms(h: &Multigraph) -> Vec<Vec<usize>> {
    let n = h.n();
    let adj = h.adjacency_masks();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];

    fn go(adj: &[u64], v: usize, used: u64, image: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = adj.len();
        if v == n {
            out.push(image.clone());
            return;
        }
        for w in 0..n {
            if used >> w & 1 == 1 || adj[w].count_ones() != adj[v].count_ones() {
                continue;
            }
            let consistent = (0..v).all(|x| (adj[v] >> x & 1) == (adj[w] >> image[x] & 1));
            if consistent {
                image[v] = w;
                go(adj, v + 1, used | 1 << w, image, out);
            }
        }
    }
    go(&adj, 0, 0, &mut image, &mut out);
    out
}

/// Orbit representatives of multiplicity vectors on the edges of `h`.
fn weightings(h: &Multigraph, max_mu: u32, budget: u32) -> Result<Vec<Enumerated>> {
    let pairs = h.pairs();
    let m = pairs.len();
    if m as u64 > budget as u64 {
        return Ok(Vec::new());
    }
    let index: HashMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, p)| ((p.u, p.v), i))
        .collect();
    // edge permutations induced by automorphisms, identity excluded
    let edge_perms: Vec<Vec<usize>> = simple_automorphisms(h)
        .into_iter()
        .filter(|a| a.iter().enumerate().any(|(i, &x)| i != x))
        .map(|a| {
            pairs
                .iter()
                .map(|p| {
                    let (x, y) = crate::graph::ordered(a[p.u], a[p.v]);
                    index[&(x, y)]
                })
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut w = vec![1u32; m];
    let mut image = vec![0u32; m];
    loop {
        let is_rep = edge_perms.iter().all(|sigma| {
            for (e, &s) in sigma.iter().enumerate() {
                image[s] = w[e];
            }
            image <= w
        });
        if is_rep {
            let mut weighted = pairs.to_vec();
            for (p, &mult) in weighted.iter_mut().zip(&w) {
                *p = Pair { mult, ..*p };
            }
            let g = Multigraph::from_sorted_pairs(h.n(), weighted);
            let (key, graph) = canonical_graph(&g)?;
            out.push(Enumerated { key, graph });
        }
        if !next_vector(&mut w, max_mu, budget) {
            break;
        }
    }
    Ok(out)
}

/// Advances `w` (odometer, last position fastest) to the next vector with
/// entries in `1..=max_mu` and sum at most `budget`.
fn next_vector(w: &mut [u32], max_mu: u32, budget: u32) -> bool {
    let mut sum: u32 = w.iter().sum();
    for i in (0..w.len()).rev() {
        if w[i] < max_mu && sum < budget {
            w[i] += 1;
            return true;
        }
        sum -= w[i] - 1;
        w[i] = 1;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::canon::canonical_form;
    use crate::generate::families::{mu_cycle, petersen};
    use std::collections::HashSet;

    #[test]
    fn simple_graph_counts() {
        // Known counts of graphs on n vertices: 1, 2, 4, 11, 34, 156.
        let counts: Vec<usize> = (1..=6)
            .map(|n| simple_graphs(n, 3, 100).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn girth_five_on_five_vertices_with_cycle_is_c5() {
        let spec = EnumSpec {
            n_min: 5,
            n_max: 5,
            max_mu: 1,
            girth_min: 5,
            max_edge_copies: 20,
            connected: true,
            require_cycle: true,
        };
        let all = enumerate_multigraphs(&spec).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0].key,
            canonical_form(&mu_cycle(5, 1).unwrap()).unwrap()
        );
    }

    #[test]
    fn triangle_is_only_cyclic_graph_on_three_vertices() {
        let spec = EnumSpec {
            n_min: 3,
            n_max: 3,
            max_mu: 1,
            girth_min: 3,
            max_edge_copies: 3,
            connected: false,
            require_cycle: true,
        };
        let all = enumerate_multigraphs(&spec).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].graph.edge_count(), 3);
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(simple_automorphisms(&mu_cycle(5, 1).unwrap()).len(), 10);
        assert_eq!(simple_automorphisms(&petersen()).len(), 120);
        assert_eq!(simple_automorphisms(&Multigraph::empty(4)).len(), 24);
    }

    #[test]
    fn odometer_respects_budget() {
        let mut w = vec![1, 1];
        let mut seen = vec![w.clone()];
        while next_vector(&mut w, 3, 4) {
            seen.push(w.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 2],
                vec![3, 1]
            ]
        );
    }

    #[test]
    fn keys_are_distinct_and_sorted() {
        let spec = EnumSpec {
            n_min: 1,
            n_max: 4,
            max_mu: 2,
            girth_min: 3,
            max_edge_copies: 6,
            connected: false,
            require_cycle: false,
        };
        let all = enumerate_multigraphs(&spec).unwrap();
        let keys: HashSet<_> = all.iter().map(|e| e.key.clone()).collect();
        assert_eq!(keys.len(), all.len());
        assert!(all.windows(2).all(|w| w[0].key < w[1].key));
        assert!(all.iter().all(|e| spec.admits(&e.graph)));
    }
}
