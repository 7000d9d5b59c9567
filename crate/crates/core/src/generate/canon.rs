//! Canonical forms by exhaustive permutation search.
//!
//! The key of a graph is its vertex count followed by the lower triangle of
//! the multiplicity matrix in row-major order, minimized over all
//! relabelings that list vertices in ascending order of
//! `(degree, simple degree)`. Restricting to invariant-respecting
//! relabelings keeps the key an isomorphism invariant while pruning most
//! branches. Rows are fixed one position at a time so partial keys can be
//! compared against the best complete key found so far.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 10;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s)
            .map(CanonicalForm)
            .map_err(|e| Error::BadParameter(format!("bad canonical key `{s}`: {e}")))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalForm::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(key, _)| key)
}

/// The canonical key together with a relabeling `v -> perm[v]` that maps
/// `g` onto the graph the key describes.
pub fn canonical_labeling(g: &Multigraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "canonical form supports at most {CANON_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut matrix = vec![vec![0u8; n]; n];
    for p in g.pairs() {
        let m = u8::try_from(p.mult)
            .map_err(|_| Error::InstanceTooLarge(format!("multiplicity {} exceeds 255", p.mult)))?;
        matrix[p.u][p.v] = m;
        matrix[p.v][p.u] = m;
    }
    let adj = g.adjacency_masks();
    let invariant = |v: usize| (g.degree(v), adj[v].count_ones());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| invariant(v));
    // cell_of_position[p] = the set of vertices allowed at position p.
    let cell_of_position: Vec<u16> = (0..n)
        .map(|p| {
            order
                .iter()
                .filter(|&&v| invariant(v) == invariant(order[p]))
                .fold(0u16, |m, &v| m | 1 << v)
        })
        .collect();

    let mut search = Search {
        n,
        matrix: &matrix,
        cells: &cell_of_position,
        placed: vec![0; n],
        current: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
        best_perm: Vec::new(),
    };
    search.dfs(0, 0, false);
    let mut key = vec![n as u8];
    key.extend(search.best.unwrap_or_default());
    // best_perm[p] = original vertex at position p; invert it.
    let mut perm = vec![0; n];
    for (p, &v) in search.best_perm.iter().enumerate() {
        perm[v] = p;
    }
    Ok((CanonicalForm(key), perm))
}

/// Relabels `g` into its canonical labeling.
pub fn canonical_graph(g: &Multigraph) -> Result<(CanonicalForm, Multigraph)> {
    let (key, perm) = canonical_labeling(g)?;
    Ok((key, g.relabel(&perm)?))
}

struct Search<'a> {
    n: usize,
    matrix: &'a [Vec<u8>],
    cells: &'a [u16],
    placed: Vec<usize>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// Returns true when the best key was replaced inside this subtree.
    fn dfs(&mut self, pos: usize, used: u16, prefix_less: bool) -> bool {
        if pos == self.n {
            if prefix_less || self.best.is_none() {
                self.best = Some(self.current.clone());
                self.best_perm = self.placed.clone();
                return true;
            }
            return false;
        }
        let start = pos * pos.saturating_sub(1) / 2;
        let mut less = prefix_less;
        let mut updated = false;
        let mut candidates = self.cells[pos] & !used;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.current.truncate(start);
            for j in 0..pos {
                self.current.push(self.matrix[v][self.placed[j]]);
            }
            let order = match (&self.best, less) {
                (None, _) | (_, true) => std::cmp::Ordering::Less,
                (Some(best), false) => self.current[start..].cmp(&best[start..start + pos]),
            };
            if order == std::cmp::Ordering::Greater {
                continue;
            }
            self.placed[pos] = v;
            if self.dfs(pos + 1, used | 1 << v, order == std::cmp::Ordering::Less) {
                updated = true;
                less = false;
            }
        }
        self.current.truncate(start);
        updated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::families::{mu_cycle, petersen, ring};

    #[test]
    fn relabeled_cycles_agree() {
        let c5 = mu_cycle(5, 1).unwrap();
        let other = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&other).unwrap()
        );
    }

    #[test]
    fn ring_rotation_and_multiset() {
        let a = ring(5, &[2, 1, 1, 1, 1]).unwrap();
        let b = ring(5, &[1, 2, 1, 1, 1]).unwrap();
        let c = ring(5, &[2, 2, 1, 1, 1]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn canonical_graph_reproduces_key() {
        let g =
            Multigraph::build(6, &[(0, 5, 2), (5, 3, 1), (3, 1, 3), (1, 0, 1), (2, 4, 1)]).unwrap();
        let (key, h) = canonical_graph(&g).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), key);
        let (key2, perm) = canonical_labeling(&h).unwrap();
        assert_eq!(key2, key);
        assert_eq!(h.relabel(&perm).unwrap(), h);
    }

    #[test]
    fn limits_and_hex() {
        assert!(matches!(
            canonical_form(&Multigraph::empty(11)),
            Err(Error::InstanceTooLarge(_))
        ));
        let key = canonical_form(&petersen()).unwrap();
        assert_eq!(CanonicalForm::from_hex(&key.to_hex()).unwrap(), key);
        assert_eq!(
            canonical_form(&Multigraph::empty(0)).unwrap().as_bytes(),
            &[0]
        );
    }
}
