use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generate::checkpoint::Checkpoint;
use crate::generate::enumerate::{enumerate_multigraphs, Enumerated};
use crate::scan::config::ScanConfig;
use crate::scan::lemma::run_lemma_suite;
use crate::scan::record::{evaluate, ScanRecord, ScanSummary};

/// Records evaluated between two checkpoint writes.
pub const CHUNK: usize = 512;

/// Evaluates every enumerated graph and returns records in key order.
/// Ignores `outputPath` and `checkpointPath`.
pub fn scan_records(config: &ScanConfig) -> Result<(Vec<ScanRecord>, ScanSummary)> {
    config.validate()?;
    let pool = config.thread_pool()?;
    let opts = config.chromatic_options();
    let records = pool.install(|| -> Result<Vec<ScanRecord>> {
        enumerate_multigraphs(&config.enum_spec)?
            .into_par_iter()
            .map(|e| evaluate(e.key, &e.graph, config, &opts))
            .collect()
    })?;
    let mut summary = ScanSummary::default();
    for r in &records {
        summary.add(r, config);
    }
    if config.lemma_suite {
        summary.lemma_suite = Some(run_lemma_suite(config, config.seed)?);
    }
    Ok((records, summary))
}

pub fn run_scan(config: &ScanConfig) -> Result<ScanSummary> {
    run_scan_until(config, &AtomicBool::new(false))
}

/// Writes the JSONL report to `outputPath`, resuming from `checkpointPath`
/// when it exists. `stop` is polled between chunks; on interrupt the report
/// and checkpoint end on the same chunk boundary.
pub fn run_scan_until(config: &ScanConfig, stop: &AtomicBool) -> Result<ScanSummary> {
    config.validate()?;
    let output = config
        .output_path
        .as_deref()
        .ok_or_else(|| Error::Config("run_scan needs an outputPath".into()))?;
    let pool = config.thread_pool()?;
    let opts = config.chromatic_options();
    let items: Vec<Enumerated> = pool.install(|| enumerate_multigraphs(&config.enum_spec))?;

    let mut checkpoint = match &config.checkpoint_path {
        Some(path) => match Checkpoint::load(path)? {
            Some(cp) if cp.spec != config.enum_spec => {
                return Err(Error::Config(format!(
                    "checkpoint {} was written for different enumeration bounds",
                    path.display()
                )))
            }
            Some(cp) => cp,
            None => Checkpoint::new(config.enum_spec.clone()),
        },
        None => Checkpoint::new(config.enum_spec.clone()),
    };

    let mut summary = ScanSummary::default();
    // Keep exactly the checkpointed lines of an earlier report.
    let kept = if checkpoint.done.is_empty() {
        String::new()
    } else {
        let previous = fs::read_to_string(output).unwrap_or_default();
        let mut kept = String::new();
        for line in previous.split_inclusive('\n') {
            if !line.ends_with('\n') {
                break;
            }
            let Ok(record) = serde_json::from_str::<ScanRecord>(line) else {
                break;
            };
            if !checkpoint.done.contains(&record.graph_key) {
                break;
            }
            summary.add(&record, config);
            kept.push_str(line);
        }
        if summary.total as usize != checkpoint.done.len() {
            return Err(Error::Config(format!(
                "report {} does not match its checkpoint",
                output.display()
            )));
        }
        kept
    };
    summary.resumed = summary.total;
    fs::write(output, &kept)?;
    let mut writer = BufWriter::new(OpenOptions::new().append(true).open(output)?);

    let pending: Vec<&Enumerated> = items
        .iter()
        .filter(|e| !checkpoint.done.contains(&e.key))
        .collect();
    for chunk in pending.chunks(CHUNK) {
        if stop.load(Ordering::SeqCst) {
            summary.interrupted = true;
            break;
        }
        let records = pool.install(|| -> Result<Vec<ScanRecord>> {
            chunk
                .par_iter()
                .map(|e| evaluate(e.key.clone(), &e.graph, config, &opts))
                .collect()
        })?;
        for r in &records {
            serde_json::to_writer(&mut writer, r)?;
            writer.write_all(b"\n")?;
            summary.add(r, config);
        }
        writer.flush()?;
        if let Some(path) = &config.checkpoint_path {
            checkpoint
                .done
                .extend(records.into_iter().map(|r| r.graph_key));
            writer.get_ref().sync_data()?;
            checkpoint.store(path)?;
        }
    }
    writer.flush()?;
    drop::<BufWriter<File>>(writer);

    if config.lemma_suite && !summary.interrupted {
        summary.lemma_suite = Some(run_lemma_suite(config, config.seed)?);
    }
    Ok(summary)
}
