//! Scans over enumerated corpora and the lemma property suites.

pub mod config;
pub mod lemma;
pub mod record;
pub mod run;

pub use config::{ScanConfig, WORKERS_ENV};
pub use lemma::{lemma22_check, run_lemma_suite, Lemma22Outcome, Lemma22Result, LemmaReport};
pub use record::{evaluate, thm13_gate, ScanRecord, ScanSummary, Status, Violations};
pub use run::{run_scan, run_scan_until, scan_records};
