use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use steffenlab::generate::{CanonicalForm, Checkpoint, EnumSpec};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_steffenlab"));
    c.env_remove("STEFFENLAB_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn generated_families_pipe_into_chi() {
    let gen = run(&["gen", "mu-cycle", "5", "3"]);
    assert_eq!(gen.status.code(), Some(0));
    let chi = run_with_stdin(&["chi", "-"], &stdout(&gen));
    assert_eq!(chi.status.code(), Some(0), "{}", stderr(&chi));
    assert_eq!(stdout(&chi), "8\n");

    let gen = run(&["gen", "--json", "mu-complete", "3", "5"]);
    let chi = run_with_stdin(&["chi", "--mode", "gs", "-"], &stdout(&gen));
    assert_eq!(stdout(&chi), "15\n");
}

#[test]
fn chi_writes_a_valid_witness() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("ring.mgr");
    fs::write(&graph, stdout(&run(&["gen", "ring", "5", "2,2,2,2,2"]))).unwrap();
    let witness = dir.path().join("w.json");
    let out = run(&[
        "chi",
        graph.to_str().unwrap(),
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut lines = stdout(&out).lines().map(String::from).collect::<Vec<_>>();
    assert_eq!(lines.remove(0), "5");
    assert!(lines[0].starts_with("witness "));
    let g = steffenlab::format::parse(&fs::read_to_string(&graph).unwrap()).unwrap();
    let w: steffenlab::coloring::EdgeColoring =
        serde_json::from_str(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert!(steffenlab::coloring::validate_coloring(&g, &w).unwrap());
}

#[test]
fn json_subcommands() {
    let petersen = steffenlab::format::serialize(&steffenlab::generate::petersen());
    let inv = run_with_stdin(&["invariants", "-"], &petersen);
    let v: serde_json::Value = serde_json::from_slice(&inv.stdout).unwrap();
    assert_eq!(v["girth"], 5);
    assert_eq!(v["steffenBound"], 4);

    let crit = run_with_stdin(&["critical", "-"], &petersen);
    let v: serde_json::Value = serde_json::from_slice(&crit.stdout).unwrap();
    assert_eq!(v["chi"], 4);

    let ring = run_with_stdin(&["ring-find", "--target", "4", "-"], &petersen);
    assert_eq!(ring.status.code(), Some(0));
    assert_eq!(stdout(&ring).trim(), "null");

    let part = run_with_stdin(&["partition", "-"], &petersen);
    let v: serde_json::Value = serde_json::from_slice(&part.stdout).unwrap();
    assert_eq!(v["cycles"].as_array().unwrap().len(), 2);
    assert_eq!(v["v0"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let missing = run(&["chi", "/nonexistent/graph.mgr"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("/nonexistent/graph.mgr"));
    assert_eq!(
        run_with_stdin(&["chi", "-"], "not a graph").status.code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "mu-cycle", "1", "2"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"enumSpec": {"nMin": 1, "nMax": 3, "maxMu": 2, "maxEdgeCopies": 4}, "bogus": 1}"#,
    )
    .unwrap();
    let out = run(&["scan", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "));
    fs::write(
        &bad,
        r#"{"enumSpec": {"nMin": 4, "nMax": 3, "maxMu": 2, "maxEdgeCopies": 4}}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["scan", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

fn write_config(dir: &Path, extra: &str) -> String {
    let path = dir.join("scan.json");
    let text = format!(
        r#"{{"enumSpec": {{"nMin": 1, "nMax": 5, "maxMu": 3, "maxEdgeCopies": 10}}{extra}}}"#
    );
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn scan_to_stdout_and_worker_count_do_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "");
    let one = run(&["scan", "--config", &config]);
    assert_eq!(one.status.code(), Some(0), "{}", stderr(&one));
    let two = bin()
        .args(["scan", "--config", &config])
        .env("STEFFENLAB_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(one.stdout, two.stdout);
    let lines = stdout(&one);
    let first: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    let keys: Vec<_> = first.as_object().unwrap().keys().cloned().collect();
    for k in [
        "graphKey",
        "Delta",
        "steffenBound",
        "achievesBound",
        "ringWitness",
        "status",
    ] {
        assert!(keys.iter().any(|x| x == k), "missing {k}");
    }
    let summary: serde_json::Value = serde_json::from_slice(&one.stderr).unwrap();
    assert_eq!(
        summary["total"].as_u64().unwrap() as usize,
        lines.lines().count()
    );
}

#[test]
fn resumed_scan_reproduces_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.jsonl");
    let cp_path = dir.path().join("scan.ckpt");
    let config = write_config(
        dir.path(),
        &format!(
            r#", "outputPath": {:?}, "checkpointPath": {:?}"#,
            report.to_str().unwrap(),
            cp_path.to_str().unwrap()
        ),
    );
    let full = run(&["scan", "--config", &config]);
    assert_eq!(full.status.code(), Some(0), "{}", stderr(&full));
    let reference = fs::read(&report).unwrap();
    let summary: serde_json::Value = serde_json::from_slice(&full.stdout).unwrap();
    assert_eq!(summary["resumed"], 0);
    let total = summary["total"].as_u64().unwrap() as usize;
    assert!(total > 600);

    let cp = Checkpoint::load(&cp_path).unwrap().unwrap();
    assert_eq!(cp.done.len(), total);
    let spec: EnumSpec = cp.spec.clone();

    // Simulate an interruption after the first chunk: the checkpoint lists 512
    // keys and the report holds those lines plus a partly written tail.
    let text = String::from_utf8(reference.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let mut partial = Checkpoint::new(spec);
    for line in &lines[..512] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        partial
            .done
            .insert(CanonicalForm::from_hex(v["graphKey"].as_str().unwrap()).unwrap());
    }
    partial.store(&cp_path).unwrap();
    let mut truncated = lines[..520].join("\n");
    truncated.push_str("\n{\"graphKey\":\"05");
    fs::write(&report, truncated).unwrap();

    let resumed = run(&["scan", "--config", &config]);
    assert_eq!(resumed.status.code(), Some(0), "{}", stderr(&resumed));
    assert_eq!(fs::read(&report).unwrap(), reference);
    let summary: serde_json::Value = serde_json::from_slice(&resumed.stdout).unwrap();
    assert_eq!(summary["resumed"], 512);
    assert_eq!(summary["total"].as_u64().unwrap() as usize, total);

    // A finished run resumes everything and rewrites nothing.
    let again = run(&["scan", "--config", &config]);
    assert_eq!(fs::read(&report).unwrap(), reference);
    let summary: serde_json::Value = serde_json::from_slice(&again.stdout).unwrap();
    assert_eq!(summary["resumed"].as_u64().unwrap() as usize, total);
}

#[test]
fn checkpoint_for_other_bounds_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    let cp_path = dir.path().join("c.ckpt");
    let other = EnumSpec {
        n_min: 1,
        n_max: 4,
        max_mu: 2,
        girth_min: 3,
        max_edge_copies: 6,
        connected: false,
        require_cycle: false,
    };
    Checkpoint::new(other).store(&cp_path).unwrap();
    let config = write_config(
        dir.path(),
        &format!(
            r#", "outputPath": {:?}, "checkpointPath": {:?}"#,
            report.to_str().unwrap(),
            cp_path.to_str().unwrap()
        ),
    );
    let out = run(&["scan", "--config", &config]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("different enumeration bounds"));
}

#[test]
fn lemma_suite_matches_golden_report() {
    let out = run(&[
        "lemma-suite",
        "--config",
        &data("lemma_suite.json"),
        "--seed",
        "42",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let golden = fs::read_to_string(format!(
        "{}/tests/golden/lemma_suite_seed42.json",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap();
    assert_eq!(stdout(&out), golden);
}
