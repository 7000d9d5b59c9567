//! Command-line front end; `src/bin/steffenlab.rs` is a thin wrapper.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::atomic::AtomicBool;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::coloring::chromatic::{chromatic_index_with, ChiMode, ChromaticOptions};
use crate::coloring::critical::{extract_critical_with, is_critical_given_chi};
use crate::error::{Error, Result};
use crate::format::{parse_any, serialize, GraphJson};
use crate::generate::families::{mu_complete, mu_cycle, ring};
use crate::graph::Multigraph;
use crate::invariants::cycle::girth;
use crate::invariants::density::density;
use crate::invariants::steffen::steffen_bound;
use crate::scan::{run_lemma_suite, run_scan_until, scan_records, ScanConfig};
use crate::structure::fan::{fan_bound_check, max_fan};
use crate::structure::partition::cycle_partition;
use crate::structure::ring::find_ring_subgraph_with_chi_with;

/// Exit status when a theorem or lemma check fails.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status for usage, input and configuration errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "steffenlab",
    version,
    about = "Exact edge-coloring analysis of multigraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basic invariants, girth, density and the girth-refined bound as JSON.
    Invariants { file: String },
    /// Chromatic index.
    Chi {
        file: String,
        #[arg(long, default_value = "search")]
        mode: String,
        /// Seconds per colorability decision.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        /// Write the witness coloring as JSON to this path.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Density with its witness vertex set.
    Density { file: String },
    /// Criticality test and a critical subgraph with the same chromatic index.
    Critical { file: String },
    /// Cycle partition and a maximum fan from every remainder vertex to every cycle.
    Partition { file: String },
    /// Ring subgraph with the given chromatic index (default: that of the graph).
    RingFind {
        file: String,
        #[arg(long)]
        target: Option<u32>,
    },
    /// Print a family member in MGR text.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Print the JSON form instead.
        #[arg(long, global = true)]
        json: bool,
    },
    /// Exhaustive scan described by a JSON config.
    Scan {
        #[arg(long)]
        config: PathBuf,
    },
    /// Structure checks on critical graphs and a seeded random corpus.
    LemmaSuite {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// μC_g
    MuCycle { g: usize, mu: u32 },
    /// μK_n
    MuComplete { n: usize, mu: u32 },
    /// Ring on C_g with comma-separated multiplicities.
    Ring { g: usize, mults: String },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, file: &str) -> Result<Multigraph> {
        let text = if file == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(file)
                .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{file}: {e}"))))?
        };
        parse_any(&text)
    }

    fn json<T: serde::Serialize + ?Sized>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer_pretty(&mut *self.stdout, value)?;
        writeln!(self.stdout)?;
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    stop: &AtomicBool,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match execute(cli.command, &mut io, stop) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, io: &mut Io, stop: &AtomicBool) -> Result<i32> {
    let opts = ChromaticOptions::default();
    match command {
        Command::Invariants { file } => {
            let g = io.load(&file)?;
            let d = density(&g)?;
            let mut v = serde_json::to_value(g.basic_invariants())?;
            v["girth"] = serde_json::to_value(girth(&g))?;
            v["gamma"] = json!(d.gamma);
            v["gammaWitness"] = json!(d.witness);
            v["steffenBound"] = json!(steffen_bound(&g));
            io.json(&v)?;
        }
        Command::Chi {
            file,
            mode,
            timeout,
            witness,
        } => {
            let g = io.load(&file)?;
            let opts = ChromaticOptions {
                mode: mode.parse::<ChiMode>()?,
                timeout: Some(Duration::from_secs(timeout.max(1))),
                ..opts
            };
            let result = chromatic_index_with(&g, &opts)?;
            writeln!(io.stdout, "{}", result.chi)?;
            if let Some(path) = witness {
                fs::write(&path, serde_json::to_string(&result.witness)? + "\n")?;
                writeln!(io.stdout, "witness {}", path.display())?;
            }
        }
        Command::Density { file } => {
            let g = io.load(&file)?;
            io.json(&density(&g)?)?;
        }
        Command::Critical { file } => {
            let g = io.load(&file)?;
            if g.edge_count() == 0 {
                return Err(Error::PreconditionFailed("graph has no edges".into()));
            }
            let chi = chromatic_index_with(&g, &opts)?.chi;
            let critical = is_critical_given_chi(&g, chi, &opts)?;
            let core = extract_critical_with(&g, &opts)?;
            io.json(&json!({
                "chi": chi,
                "isCritical": critical,
                "criticalSubgraph": GraphJson::from(&core),
            }))?;
        }
        Command::Partition { file } => {
            let g = io.load(&file)?;
            let p = cycle_partition(&g);
            let mut fans = Vec::new();
            for &apex in &p.v0 {
                for (h, cycle) in p.cycles.iter().enumerate() {
                    if let Some(fan) = max_fan(&g, &p, apex, h)? {
                        let mut v = serde_json::to_value(&fan)?;
                        v["t"] = json!(fan.t());
                        v["tree"] = json!(fan.tree_vertices());
                        v["boundHolds"] = json!(fan_bound_check(&fan, cycle));
                        fans.push(v);
                    }
                }
            }
            let mut v = serde_json::to_value(&p)?;
            v["fans"] = Value::Array(fans);
            io.json(&v)?;
        }
        Command::RingFind { file, target } => {
            let g = io.load(&file)?;
            let target = match target {
                Some(t) => t,
                None => chromatic_index_with(&g, &opts)?.chi,
            };
            let ring = find_ring_subgraph_with_chi_with(&g, target, &opts)?;
            io.json(&ring)?;
        }
        Command::Gen { family, json } => {
            let g = match family {
                Family::MuCycle { g, mu } => mu_cycle(g, mu)?,
                Family::MuComplete { n, mu } => mu_complete(n, mu)?,
                Family::Ring { g, mults } => {
                    let mults = mults
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse::<u32>()
                                .map_err(|_| Error::BadParameter(format!("bad multiplicity `{s}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    ring(g, &mults)?
                }
            };
            if json {
                writeln!(io.stdout, "{}", crate::format::to_json(&g))?;
            } else {
                write!(io.stdout, "{}", serialize(&g))?;
            }
        }
        Command::Scan { config } => {
            let config = ScanConfig::load(&config)?;
            let summary = if config.output_path.is_some() {
                let summary = run_scan_until(&config, stop)?;
                io.json(&summary)?;
                summary
            } else {
                let (records, summary) = scan_records(&config)?;
                for r in &records {
                    serde_json::to_writer(&mut *io.stdout, r)?;
                    writeln!(io.stdout)?;
                }
                serde_json::to_writer_pretty(&mut *io.stderr, &summary)?;
                writeln!(io.stderr)?;
                summary
            };
            if summary.interrupted {
                writeln!(
                    io.stderr,
                    "interrupted; rerun with the same config to resume"
                )?;
            }
            if summary.violation_count() > 0 {
                return Ok(EXIT_VIOLATION);
            }
        }
        Command::LemmaSuite { config, seed } => {
            let config = ScanConfig::load(&config)?;
            let report = run_lemma_suite(&config, seed)?;
            io.json(&report)?;
            if report.total_violations > 0 {
                return Ok(EXIT_VIOLATION);
            }
        }
    }
    Ok(0)
}
