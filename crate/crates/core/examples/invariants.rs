//! Degrees, multiplicity, girth, density and the girth-refined bound.
//!
//!     cargo run --example invariants

use steffenlab::generate::{mu_complete, mu_cycle, petersen, ring};
use steffenlab::invariants::{density, girth, shortest_cycle, steffen_bound};
use steffenlab::Multigraph;

fn show(name: &str, g: &Multigraph) -> steffenlab::Result<()> {
    let inv = g.basic_invariants();
    let d = density(g)?;
    let shortest = shortest_cycle(&g.underlying_simple(), g.underlying_simple().all());
    println!(
        "{name:>12}: n={} m={} Δ={} δ={} μ={} girth={} Γ={} (on {:?}) bound={} shortest={:?}",
        inv.n,
        inv.m,
        inv.max_degree,
        inv.min_degree,
        inv.mu,
        girth(g),
        d.gamma,
        d.witness,
        steffen_bound(g),
        shortest.map(|c| c.vertices().to_vec()),
    );
    Ok(())
}

fn main() -> steffenlab::Result<()> {
    show("3C_5", &mu_cycle(5, 3)?)?;
    show("2K_5", &mu_complete(5, 2)?)?;
    show("petersen", &petersen())?;
    show("ring 21212", &ring(5, &[2, 1, 2, 1, 2])?)?;
    show("double edge", &Multigraph::build(2, &[(0, 1, 2)])?)?;
    Ok(())
}
