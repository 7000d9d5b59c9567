//! Exact k-edge-colorability by backtracking.
//!
//! The search assigns each adjacent pair a *set* of `mult` colors at once,
//! since the parallel copies of a pair are interchangeable. Colors are
//! introduced in index order: a pair may only use fresh colors
//! `top, top+1, ...` where `top` counts the colors used so far, which
//! removes the `k!` relabelings of every coloring. The next pair is the one
//! with the least slack between its available colors and its multiplicity,
//! ties broken by larger endpoint-degree sum. A vertex is a dead end when
//! the colors still usable on its uncolored pairs cannot cover its
//! remaining degree.
//!
//! Components are solved independently.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ordered, Multigraph};
use crate::invariants::density::density_with_cap;

/// Largest color count the bitset search supports.
pub const MAX_COLORS: u32 = 128;

/// Components up to this size get an exact density pre-check.
const DENSITY_PRECHECK_MAX_N: usize = 16;

/// Colors `1..=k` for every parallel copy of every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    pub k: u32,
    /// `(u, v)` with `u < v` to the colors of copies `0..mult`.
    pub assignment: BTreeMap<(usize, usize), Vec<u32>>,
}

impl EdgeColoring {
    pub fn empty(k: u32) -> Self {
        EdgeColoring {
            k,
            assignment: BTreeMap::new(),
        }
    }

    /// Color classes `1..=k`, each a sorted list of pairs.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (&pair, colors) in &self.assignment {
            for &c in colors {
                if (1..=self.k).contains(&c) {
                    classes[c as usize - 1].push(pair);
                }
            }
        }
        for class in &mut classes {
            class.sort_unstable();
        }
        classes
    }

    pub fn from_classes(k: u32, classes: &[Vec<(usize, usize)>]) -> Self {
        let mut assignment: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
        for (i, class) in classes.iter().enumerate() {
            for &(u, v) in class {
                assignment
                    .entry(ordered(u, v))
                    .or_default()
                    .push(i as u32 + 1);
            }
        }
        for colors in assignment.values_mut() {
            colors.sort_unstable();
        }
        EdgeColoring { k, assignment }
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: u32,
    classes: Vec<Vec<[usize; 2]>>,
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringJson {
            k: self.k,
            classes: self
                .classes()
                .into_iter()
                .map(|c| c.into_iter().map(|(u, v)| [u, v]).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ColoringJson::deserialize(d)?;
        let classes: Vec<Vec<(usize, usize)>> = j
            .classes
            .iter()
            .map(|c| c.iter().map(|&[u, v]| (u, v)).collect())
            .collect();
        Ok(EdgeColoring::from_classes(j.k, &classes))
    }
}

/// True iff `c` is a proper coloring of `g` with colors in `1..=c.k`.
///
/// Fails with `CoverageMismatch` when copies are missing or extra.
pub fn validate_coloring(g: &Multigraph, c: &EdgeColoring) -> Result<bool> {
    if c.assignment.len() != g.pairs().len() {
        return Err(Error::CoverageMismatch(format!(
            "{} pairs colored, graph has {}",
            c.assignment.len(),
            g.pairs().len()
        )));
    }
    let mut seen: Vec<BTreeMap<u32, ()>> = vec![BTreeMap::new(); g.n()];
    let mut proper = true;
    for p in g.pairs() {
        let colors = c.assignment.get(&(p.u, p.v)).ok_or_else(|| {
            Error::CoverageMismatch(format!("pair {{{},{}}} has no colors", p.u, p.v))
        })?;
        if colors.len() != p.mult as usize {
            return Err(Error::CoverageMismatch(format!(
                "pair {{{},{}}} has {} copies but {} colors",
                p.u,
                p.v,
                p.mult,
                colors.len()
            )));
        }
        for &col in colors {
            if !(1..=c.k).contains(&col) {
                proper = false;
            }
            for w in [p.u, p.v] {
                if seen[w].insert(col, ()).is_some() {
                    proper = false;
                }
            }
        }
    }
    Ok(proper)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Colorable(EdgeColoring),
    NotColorable,
    TimedOut,
}

/// A `k`-edge-coloring of `g` if one exists. Runs without a time limit.
pub fn is_k_colorable(g: &Multigraph, k: u32) -> Option<EdgeColoring> {
    match decide(g, k, None).expect("color count within solver range") {
        Decision::Colorable(c) => Some(c),
        Decision::NotColorable => None,
        Decision::TimedOut => unreachable!("no deadline was set"),
    }
}

/// Decides `k`-edge-colorability within an optional time budget.
pub fn decide(g: &Multigraph, k: u32, budget: Option<Duration>) -> Result<Decision> {
    if g.edge_count() == 0 {
        return Ok(Decision::Colorable(EdgeColoring::empty(k)));
    }
    if g.max_degree() > k {
        return Ok(Decision::NotColorable);
    }
    if k > MAX_COLORS {
        return Err(Error::InstanceTooLarge(format!(
            "{k} colors exceeds the solver maximum of {MAX_COLORS}"
        )));
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let mut coloring = EdgeColoring::empty(k);
    for comp in g.edge_components() {
        let sub = g.induced(&comp)?;
        if sub.n() <= DENSITY_PRECHECK_MAX_N
            && density_with_cap(&sub, DENSITY_PRECHECK_MAX_N)?.gamma > k as u64
        {
            return Ok(Decision::NotColorable);
        }
        let mut search = Search::new(&sub, k, deadline);
        match search.run() {
            Outcome::Found => {
                for (i, p) in sub.pairs().iter().enumerate() {
                    let colors: Vec<u32> = crate::graph::bits128(search.assigned[i])
                        .map(|c| c as u32 + 1)
                        .collect();
                    coloring
                        .assignment
                        .insert(ordered(comp[p.u], comp[p.v]), colors);
                }
            }
            Outcome::Exhausted => return Ok(Decision::NotColorable),
            Outcome::TimedOut => return Ok(Decision::TimedOut),
        }
    }
    Ok(Decision::Colorable(coloring))
}

enum Outcome {
    Found,
    Exhausted,
    TimedOut,
}

struct Search {
    k: u32,
    full: u128,
    ends: Vec<(usize, usize)>,
    mult: Vec<u32>,
    /// Static tie-break weight: endpoint-degree sum.
    weight: Vec<u32>,
    incident: Vec<Vec<usize>>,
    assigned: Vec<u128>,
    used: Vec<u128>,
    remaining: Vec<u32>,
    top: u32,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search {
    fn new(g: &Multigraph, k: u32, deadline: Option<Instant>) -> Self {
        let n = g.n();
        let mut incident = vec![Vec::new(); n];
        for (i, p) in g.pairs().iter().enumerate() {
            incident[p.u].push(i);
            incident[p.v].push(i);
        }
        Search {
            k,
            full: if k == 128 {
                u128::MAX
            } else {
                (1u128 << k) - 1
            },
            ends: g.pairs().iter().map(|p| (p.u, p.v)).collect(),
            mult: g.pairs().iter().map(|p| p.mult).collect(),
            weight: g
                .pairs()
                .iter()
                .map(|p| g.degree(p.u) + g.degree(p.v))
                .collect(),
            incident,
            assigned: vec![0; g.pairs().len()],
            used: vec![0; n],
            remaining: g.degrees().to_vec(),
            top: 0,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn run(&mut self) -> Outcome {
        let left = self.ends.len();
        if self.dfs(left) {
            Outcome::Found
        } else if self.timed_out {
            Outcome::TimedOut
        } else {
            Outcome::Exhausted
        }
    }

    fn avail(&self, p: usize) -> u128 {
        let (u, v) = self.ends[p];
        self.full & !(self.used[u] | self.used[v])
    }

    fn vertex_dead_end(&self) -> bool {
        for (v, inc) in self.incident.iter().enumerate() {
            let need = self.remaining[v];
            if need == 0 {
                continue;
            }
            let mut union = 0u128;
            for &p in inc {
                if self.assigned[p] == 0 {
                    union |= self.avail(p);
                }
            }
            if union.count_ones() < need {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }

        let mut choice = None;
        let mut best = (i64::MAX, 0u32, 0u32);
        for p in 0..self.ends.len() {
            if self.assigned[p] != 0 {
                continue;
            }
            let slack = self.avail(p).count_ones() as i64 - self.mult[p] as i64;
            if slack < 0 {
                return false;
            }
            let key = (slack, u32::MAX - self.mult[p], u32::MAX - self.weight[p]);
            if key < best {
                best = key;
                choice = Some(p);
            }
        }
        let p = choice.expect("an unassigned pair remains");
        if self.vertex_dead_end() {
            return false;
        }

        let (u, v) = self.ends[p];
        let m = self.mult[p];
        let avail = self.avail(p);
        let old = avail & low_bits(self.top);
        let fresh_room = self.k - self.top;
        for fresh in 0..=m.min(fresh_room) {
            let need = m - fresh;
            if old.count_ones() < need {
                continue;
            }
            let new_bits = low_bits(self.top + fresh) & !low_bits(self.top);
            let old_bits: Vec<u32> = crate::graph::bits128(old).map(|b| b as u32).collect();
            let mut combo: Vec<usize> = (0..need as usize).collect();
            loop {
                let set = combo
                    .iter()
                    .fold(new_bits, |s, &i| s | 1u128 << old_bits[i]);
                self.assigned[p] = set;
                self.used[u] |= set;
                self.used[v] |= set;
                self.remaining[u] -= m;
                self.remaining[v] -= m;
                self.top += fresh;
                if self.dfs(left - 1) {
                    return true;
                }
                self.top -= fresh;
                self.remaining[u] += m;
                self.remaining[v] += m;
                self.used[u] &= !set;
                self.used[v] &= !set;
                self.assigned[p] = 0;
                if self.timed_out || !next_combination(&mut combo, old_bits.len()) {
                    break;
                }
            }
        }
        false
    }
}

fn low_bits(k: u32) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

/// Advances a sorted index combination over `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let r = combo.len();
    for i in (0..r).rev() {
        if combo[i] < n - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
