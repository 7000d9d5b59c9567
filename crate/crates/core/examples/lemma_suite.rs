//! Structure checks on critical graphs and on a seeded random corpus.
//!
//!     cargo run --release --example lemma_suite -- [seed]

use steffenlab::generate::EnumSpec;
use steffenlab::scan::{run_lemma_suite, ScanConfig};

fn main() -> steffenlab::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map_or(42, |s| s.parse().expect("seed"));
    let config = ScanConfig::new(EnumSpec {
        n_min: 1,
        n_max: 5,
        max_mu: 3,
        girth_min: 3,
        max_edge_copies: 12,
        connected: false,
        require_cycle: false,
    });
    let report = run_lemma_suite(&config, seed)?;
    for r in &report.lemma22.results {
        println!(
            "{:>6} {}: χ' = {}, Δ = {}, pairs decomposed = {}, passes = {}",
            r.source,
            r.graph_key,
            r.chi,
            r.max_degree,
            r.pairs_decomposed,
            r.passes()
        );
    }
    let random = &report.random;
    println!(
        "random corpus: {} graphs, {} cycles, clause checks {:?}, {} fans (max t = {})",
        random.graphs, random.cycles, random.clause_checks, random.fans, random.max_fan_t
    );
    println!("total violations: {}", report.total_violations);
    Ok(())
}
