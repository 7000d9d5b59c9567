//! A checkpointed scan writing a JSONL report.
//!
//!     cargo run --release --example scan -- [output_dir]

use std::path::PathBuf;

use steffenlab::generate::EnumSpec;
use steffenlab::scan::{run_scan, ScanConfig};

fn main() -> steffenlab::Result<()> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("steffenlab-scan"));
    std::fs::create_dir_all(&dir)?;

    let mut config = ScanConfig::new(EnumSpec {
        n_min: 3,
        n_max: 7,
        max_mu: 3,
        girth_min: 5,
        max_edge_copies: 15,
        connected: true,
        require_cycle: true,
    });
    config.output_path = Some(dir.join("report.jsonl"));
    config.checkpoint_path = Some(dir.join("report.checkpoint"));

    let summary = run_scan(&config)?;
    println!("{}", serde_json::to_string_pretty(&summary)?);
    println!("report: {}", dir.join("report.jsonl").display());

    // A second run finds everything checkpointed and only re-reads the report.
    let again = run_scan(&config)?;
    assert_eq!(again.resumed, summary.total);
    Ok(())
}
