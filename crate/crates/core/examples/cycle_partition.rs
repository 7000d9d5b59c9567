//! Greedy shortest-cycle partitions and fans from the acyclic remainder.
//!
//!     cargo run --example cycle_partition

use steffenlab::generate::petersen;
use steffenlab::invariants::short_cycle_report;
use steffenlab::structure::{cycle_partition, fan_bound_check, max_fan};
use steffenlab::Multigraph;

fn main() -> steffenlab::Result<()> {
    let p = cycle_partition(&petersen());
    p.verify(&petersen())?;
    println!("petersen: {}", serde_json::to_string(&p)?);

    // An 8-cycle with a small tree attached to it.
    let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8, 2)).collect();
    edges.extend([(8, 0, 1), (8, 9, 1), (9, 10, 1), (10, 4, 1), (9, 11, 1)]);
    let g = Multigraph::build(12, &edges)?;
    let p = cycle_partition(&g);
    p.verify(&g)?;
    println!("cycles {:?}, V0 {:?}", p.cycles, p.v0);

    for (h, cycle) in p.cycles.iter().enumerate() {
        let stage = p.stage_vertices(g.n(), h);
        let report = short_cycle_report(&g, cycle, &stage)?;
        println!(
            "C_{}: clause checks {:?}, violations {}",
            h + 1,
            report.checked,
            report.violations.len()
        );
        for &apex in &p.v0 {
            if let Some(fan) = max_fan(&g, &p, apex, h)? {
                println!(
                    "  {}-fan from {apex}: paths {:?}, |T0| = {}, bound holds = {}",
                    fan.t(),
                    fan.paths,
                    fan.tree_vertices().len(),
                    fan_bound_check(&fan, cycle)
                );
            }
        }
    }
    Ok(())
}
