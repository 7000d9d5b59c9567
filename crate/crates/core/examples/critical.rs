//! Criticality, critical subgraphs and the structure of critical graphs
//! with χ' ≥ Δ + 2.
//!
//!     cargo run --release --example critical

use steffenlab::coloring::{
    chromatic_index, degree_identity_check, extract_critical, is_critical,
    near_perfect_matching_decomposition, ChiMode,
};
use steffenlab::format::serialize;
use steffenlab::generate::mu_cycle;
use steffenlab::Multigraph;

fn main() -> steffenlab::Result<()> {
    let core = mu_cycle(5, 3)?;
    let mut edges: Vec<_> = core.pairs().iter().map(|p| (p.u, p.v, p.mult)).collect();
    edges.push((0, 5, 1));
    let g = Multigraph::build(6, &edges)?;
    println!("3C_5 plus a pendant edge: critical = {}", is_critical(&g)?);
    let extracted = extract_critical(&g)?;
    print!("extracted:\n{}", serialize(&extracted));
    println!("critical = {}", is_critical(&extracted)?);

    let chi = chromatic_index(&core, ChiMode::Search)?.chi;
    let d = near_perfect_matching_decomposition(&core, (0, 1))?;
    println!(
        "G - 01 splits into {} near-perfect matchings (χ' = {chi}):",
        d.classes.len()
    );
    for (class, missed) in d.classes.iter().zip(&d.missed_vertex) {
        println!("  {class:?} misses {missed}");
    }

    let report = degree_identity_check(&core)?;
    println!("degree identity residuals: {:?}", report.residuals);
    for c in &report.min_degree_checks {
        println!("  g = {}: δ ≥ nμ/g + 1 holds = {}", c.g, c.holds);
    }
    Ok(())
}
