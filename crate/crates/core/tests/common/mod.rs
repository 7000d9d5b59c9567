//! Test-only oracles written without the library's solver or search code.

#![allow(dead_code)]

use steffenlab::Multigraph;

/// Every edge copy as its own item.
pub fn copies(g: &Multigraph) -> Vec<(usize, usize)> {
    g.pairs()
        .iter()
        .flat_map(|p| std::iter::repeat((p.u, p.v)).take(p.mult as usize))
        .collect()
}

/// Whether some assignment of `k` colors to the individual edge copies is
/// proper. Plain depth-first search over `k^|E|` assignments; a prefix that
/// already has a conflict is not extended.
pub fn brute_colorable(g: &Multigraph, k: u32) -> bool {
    fn go(edges: &[(usize, usize)], i: usize, k: u32, used: &mut [u64]) -> bool {
        if i == edges.len() {
            return true;
        }
        let (u, v) = edges[i];
        for c in 0..k {
            let bit = 1u64 << c;
            if used[u] & bit == 0 && used[v] & bit == 0 {
                used[u] |= bit;
                used[v] |= bit;
                if go(edges, i + 1, k, used) {
                    return true;
                }
                used[u] &= !bit;
                used[v] &= !bit;
            }
        }
        false
    }
    let edges = copies(g);
    let mut used = vec![0u64; g.n()];
    go(&edges, 0, k, &mut used)
}

/// Smallest `k` with a proper `k`-coloring, by brute force.
pub fn brute_chromatic_index(g: &Multigraph) -> u32 {
    let mut k = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    while !brute_colorable(g, k) {
        k += 1;
    }
    k
}

/// Girth of the underlying simple graph by trying every vertex sequence
/// (n ≤ 8); `None` for forests.
pub fn brute_girth(g: &Multigraph) -> Option<u32> {
    let n = g.n();
    let adj = |a: usize, b: usize| g.multiplicity(a, b) > 0;
    let mut best: Option<u32> = None;
    fn extend(
        path: &mut Vec<usize>,
        n: usize,
        adj: &dyn Fn(usize, usize) -> bool,
        best: &mut Option<u32>,
    ) {
        let len = path.len();
        if len >= 3 && adj(path[len - 1], path[0]) {
            let l = len as u32;
            if best.map_or(true, |b| l < b) {
                *best = Some(l);
            }
        }
        for y in 0..n {
            if !path.contains(&y) && adj(path[len - 1], y) {
                path.push(y);
                extend(path, n, adj, best);
                path.pop();
            }
        }
    }
    for s in 0..n {
        extend(&mut vec![s], n, &adj, &mut best);
    }
    best
}

/// `max ⌈2 e(H)/(|H| - 1)⌉` over induced subgraphs with an odd number
/// `≥ 3` of vertices, by listing all subsets.
pub fn brute_density(g: &Multigraph) -> u64 {
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let s = mask.count_ones() as u64;
        if s < 3 || s % 2 == 0 {
            continue;
        }
        let e: u64 = g
            .pairs()
            .iter()
            .filter(|p| mask >> p.u & 1 == 1 && mask >> p.v & 1 == 1)
            .map(|p| p.mult as u64)
            .sum();
        best = best.max((2 * e).div_ceil(s - 1));
    }
    best
}

/// Minimum of the row-major lower-triangle multiplicity matrix over all
/// `n!` relabelings, prefixed with `n`.
pub fn brute_canonical_key(g: &Multigraph) -> Vec<u8> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = g.n();
    let mut best: Option<Vec<u8>> = None;
    for perm in permutations(n) {
        // perm[new] = old
        let mut key = vec![n as u8];
        for i in 1..n {
            for j in 0..i {
                key.push(g.multiplicity(perm[i], perm[j]) as u8);
            }
        }
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}
