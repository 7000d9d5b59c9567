//! Exact chromatic index with witness colorings.
//!
//!     cargo run --release --example chromatic_index

use std::time::Instant;

use steffenlab::coloring::{chromatic_index, decide, validate_coloring, ChiMode, Decision};
use steffenlab::generate::{mu_complete, mu_cycle};

fn main() -> steffenlab::Result<()> {
    println!("μC_g: χ' against 2μ + ⌈μ/⌊g/2⌋⌉");
    for g in [3, 5, 7] {
        for mu in 1..=4u32 {
            let graph = mu_cycle(g, mu)?;
            let r = chromatic_index(&graph, ChiMode::Search)?;
            assert!(validate_coloring(&graph, &r.witness)?);
            let formula = 2 * mu + mu.div_ceil(g as u32 / 2);
            println!("  g={g} μ={mu}: χ'={:>2} formula={formula:>2}", r.chi);
        }
    }

    println!("μK_n");
    for (n, mu) in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)] {
        let graph = mu_complete(n, mu)?;
        for mode in [ChiMode::Search, ChiMode::GsFastpath] {
            let t = Instant::now();
            let r = chromatic_index(&graph, mode)?;
            println!(
                "  {mu}K_{n} {mode:?}: χ'={} Γ={} in {:?}",
                r.chi,
                r.gamma,
                t.elapsed()
            );
        }
    }

    // A single decision, as used by the criticality tests.
    let g = mu_cycle(5, 3)?;
    for k in [7, 8] {
        let verdict = match decide(&g, k, None)? {
            Decision::Colorable(_) => "colorable",
            Decision::NotColorable => "not colorable",
            Decision::TimedOut => "timed out",
        };
        println!("3C_5 with {k} colors: {verdict}");
    }
    Ok(())
}
