use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// `μC_g`: the cycle `0 1 ... g-1` with every edge repeated `mu` times.
pub fn mu_cycle(g: usize, mu: u32) -> Result<Multigraph> {
    if g < 3 || mu < 1 {
        return Err(Error::BadParameter(format!(
            "mu_cycle needs g >= 3 and mu >= 1, got g={g}, mu={mu}"
        )));
    }
    ring(g, &vec![mu; g])
}

/// `μK_n`: every pair of `n` vertices joined by `mu` parallel edges.
pub fn mu_complete(n: usize, mu: u32) -> Result<Multigraph> {
    if n < 2 || mu < 1 {
        return Err(Error::BadParameter(format!(
            "mu_complete needs n >= 2 and mu >= 1, got n={n}, mu={mu}"
        )));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, mu));
        }
    }
    Multigraph::build(n, &edges)
}

/// Ring graph on the cycle `0 1 ... g-1`; pair `{i, i+1 mod g}` gets `mults[i]`.
pub fn ring(g: usize, mults: &[u32]) -> Result<Multigraph> {
    if g < 3 {
        return Err(Error::BadParameter(format!("ring needs g >= 3, got {g}")));
    }
    if mults.len() != g {
        return Err(Error::BadParameter(format!(
            "ring of length {g} needs {g} multiplicities, got {}",
            mults.len()
        )));
    }
    if mults.contains(&0) {
        return Err(Error::BadParameter(
            "ring multiplicities must be >= 1".into(),
        ));
    }
    let edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g, mults[i])).collect();
    Multigraph::build(g, &edges)
}

/// The Petersen graph: outer cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5, 1));
        edges.push((i, i + 5, 1));
        edges.push((i + 5, (i + 2) % 5 + 5, 1));
    }
    Multigraph::build(10, &edges).expect("petersen edges are valid")
}
