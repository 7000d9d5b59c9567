//! Exhaustive enumeration of non-isomorphic multigraphs with canonical keys.
//!
//!     cargo run --release --example enumerate -- [n_max] [max_mu] [girth_min] [max_copies]

use std::collections::BTreeMap;

use steffenlab::generate::{canonical_form, enumerate_multigraphs, ring, simple_graphs, EnumSpec};

fn main() -> steffenlab::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let arg = |i: usize, d: u32| args.get(i).copied().unwrap_or(d);

    for n in 1..=6 {
        println!(
            "simple graphs on {n} vertices: {}",
            simple_graphs(n, 3, usize::MAX)?.len()
        );
    }

    let spec = EnumSpec {
        n_min: 1,
        n_max: arg(0, 5) as usize,
        max_mu: arg(1, 2),
        girth_min: arg(2, 3),
        max_edge_copies: arg(3, 8),
        connected: false,
        require_cycle: false,
    };
    let all = enumerate_multigraphs(&spec)?;
    let mut by_n: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &all {
        *by_n.entry(e.graph.n()).or_default() += 1;
    }
    println!(
        "{} classes for {}: {by_n:?}",
        all.len(),
        serde_json::to_string(&spec)?
    );

    // Rotations of a ring share a key; different multisets do not.
    let a = canonical_form(&ring(5, &[2, 1, 1, 1, 1])?)?;
    let b = canonical_form(&ring(5, &[1, 2, 1, 1, 1])?)?;
    let c = canonical_form(&ring(5, &[2, 2, 1, 1, 1])?)?;
    println!("keys: {} {} {}", a.to_hex(), b.to_hex(), c.to_hex());
    Ok(())
}
