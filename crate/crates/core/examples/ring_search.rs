//! Ring graphs and ring subgraphs with a prescribed chromatic index.
//!
//!     cargo run --release --example ring_search

use steffenlab::coloring::{chromatic_index, ChiMode};
use steffenlab::generate::{mu_cycle, petersen, ring};
use steffenlab::structure::{find_ring_subgraph_with_chi, is_ring_graph};

fn main() -> steffenlab::Result<()> {
    println!(
        "ring(7, 3121312) is a ring: {}",
        is_ring_graph(&ring(7, &[3, 1, 2, 1, 3, 1, 2])?)
    );
    println!("petersen is a ring: {}", is_ring_graph(&petersen()));

    // Even rings are bipartite, so χ' = Δ.
    let even = ring(6, &[3, 1, 4, 2, 2, 1])?;
    let r = chromatic_index(&even, ChiMode::Search)?;
    println!("ring(6, 314221): Δ = {}, χ' = {}", even.max_degree(), r.chi);

    let g = mu_cycle(5, 3)?.add_edges(0, 2, 1)?;
    let chi = chromatic_index(&g, ChiMode::Search)?.chi;
    match find_ring_subgraph_with_chi(&g, chi)? {
        Some(ring) => println!(
            "3C_5 + chord (χ' = {chi}): {}",
            serde_json::to_string(&ring)?
        ),
        None => println!("3C_5 + chord: no ring with χ' = {chi}"),
    }
    for target in [3, 4] {
        let found = find_ring_subgraph_with_chi(&petersen(), target)?;
        println!(
            "petersen, target {target}: {:?}",
            found.map(|r| r.cycle.vertices().to_vec())
        );
    }
    Ok(())
}
