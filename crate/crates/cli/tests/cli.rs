//! End-to-end tests of the `dern` binary: output shapes, exit codes, and the
//! determinism guarantees (jobs, cache) the tool advertises.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dern() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dern"))
}

fn run(args: &[&str]) -> Output {
    dern().args(args).output().expect("binary runs")
}

fn stdout_text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn recon_reports_the_headline_value() {
    let out = run(&["recon", "dbroom:1,2,4"]);
    assert!(out.status.success(), "{}", stderr_text(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout_text(&out)).unwrap();
    assert_eq!(report["adern"], 5);
    assert_eq!(report["dern"], 2);
    assert_eq!(report["witness_confuser"][1], 4);
}

#[test]
fn deck_of_a_single_edge() {
    let out = run(&["deck", "path:2"]);
    assert!(out.status.success());
    assert_eq!(stdout_text(&out), "A? 0 1\n");
}

#[test]
fn deck_reads_graph6_from_stdin() {
    let mut child = dern()
        .args(["deck", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"CR\n").unwrap();
    let piped = child.wait_with_output().unwrap();
    assert!(piped.status.success());
    let direct = run(&["deck", "path:4"]);
    assert_eq!(piped.stdout, direct.stdout);
}

#[test]
fn usage_and_domain_errors_exit_two() {
    let claw = run(&["recon", "star:3"]);
    assert_eq!(claw.status.code(), Some(2));
    assert!(
        stderr_text(&claw).contains("error:"),
        "{}",
        stderr_text(&claw)
    );

    let too_big = run(&["verify", "--max-vertices", "20"]);
    assert_eq!(too_big.status.code(), Some(2));

    let bad_spec = run(&["deck", "nonsense:1"]);
    assert_eq!(bad_spec.status.code(), Some(2));

    let bad_flag = run(&["verify", "--no-such-flag"]);
    assert_eq!(bad_flag.status.code(), Some(2));
}

#[test]
fn verify_small_range_finds_the_documented_mismatches() {
    let tmp = tempfile::tempdir().unwrap();
    let certs = tmp.path().join("certs");
    let args = [
        "verify",
        "--max-vertices",
        "6",
        "--cert-dir",
        certs.to_str().unwrap(),
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(1), "{}", stderr_text(&out));
    let text = stdout_text(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "m,n,p,dern_pred,dern_comp,adern_pred,adern_comp,case_label,status"
    );
    assert_eq!(lines.len(), 8, "seven instances at six vertices");
    assert_eq!(lines.iter().filter(|l| l.ends_with(",mismatch")).count(), 6);
    assert!(lines
        .iter()
        .any(|l| l.starts_with("2,2,2,") && l.ends_with(",agree")));

    let mut cert_files: Vec<_> = std::fs::read_dir(&certs)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    cert_files.sort();
    assert_eq!(cert_files.len(), 6);
    assert_eq!(cert_files[0], "D_1_1_2.json");
    for file in &cert_files {
        let body = std::fs::read_to_string(certs.join(file)).unwrap();
        let cert: serde_json::Value = serde_json::from_str(&body).unwrap();
        assert!(
            cert["certificate"].is_object(),
            "{file} carries no certificate"
        );
    }

    // a rerun reproduces the report byte for byte
    let again = run(&args);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_below_the_smallest_instance_agrees_trivially() {
    let out = run(&["verify", "--max-vertices", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_text(&out),
        "m,n,p,dern_pred,dern_comp,adern_pred,adern_comp,case_label,status\n"
    );
}

#[test]
fn verify_json_format_mirrors_the_csv_columns() {
    let tmp = tempfile::tempdir().unwrap();
    let certs = tmp.path().join("certs");
    let out = run(&[
        "verify",
        "--max-vertices",
        "5",
        "--format",
        "json",
        "--cert-dir",
        certs.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let rows: serde_json::Value = serde_json::from_str(&stdout_text(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["m"], 1);
    assert_eq!(rows[0]["p"], 2);
    assert_eq!(rows[0]["status"], "mismatch");
    assert!(rows.iter().all(|r| r["adern_pred"] == r["adern_comp"]));
}

#[test]
fn jobs_value_does_not_change_the_report() {
    let tmp = tempfile::tempdir().unwrap();
    let certs = tmp.path().join("certs");
    let base = run(&[
        "verify",
        "--max-vertices",
        "7",
        "--cert-dir",
        certs.to_str().unwrap(),
    ]);
    for jobs in ["2", "3", "8"] {
        let parallel = run(&[
            "verify",
            "--max-vertices",
            "7",
            "--jobs",
            jobs,
            "--cert-dir",
            certs.to_str().unwrap(),
        ]);
        assert_eq!(base.stdout, parallel.stdout, "jobs = {jobs}");
        assert_eq!(base.status.code(), parallel.status.code());
    }
}

#[test]
fn cache_reuse_is_byte_identical_and_appends_nothing() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = tmp.path().join("sweep.jsonl");
    let certs = tmp.path().join("certs");
    let args = [
        "verify",
        "--max-vertices",
        "6",
        "--cache",
        cache.to_str().unwrap(),
        "--cert-dir",
        certs.to_str().unwrap(),
    ];
    let cold = run(&args);
    let lines_after_cold = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert_eq!(lines_after_cold, 7, "one cache entry per instance");
    let warm = run(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let lines_after_warm = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert_eq!(
        lines_after_cold, lines_after_warm,
        "warm run recomputed something"
    );

    // and the cached report matches a run that never saw a cache
    let uncached = run(&[
        "verify",
        "--max-vertices",
        "6",
        "--cert-dir",
        certs.to_str().unwrap(),
    ]);
    assert_eq!(uncached.stdout, warm.stdout);
}

#[test]
fn cache_ignores_stale_versions_and_malformed_lines() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = tmp.path().join("sweep.jsonl");
    std::fs::write(
        &cache,
        "{\"key\":\"CR\",\"dedeck\":\"\",\"report\":null,\"tool_version\":\"0.0.0\"}\nnot json at all\n",
    )
    .unwrap();
    let certs = tmp.path().join("certs");
    let out = run(&[
        "verify",
        "--max-vertices",
        "4",
        "--cache",
        cache.to_str().unwrap(),
        "--cert-dir",
        certs.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr_text(&out));
    assert!(stderr_text(&out).contains("skipping malformed cache line"));
    // the stale entry must not satisfy the lookup: the run appends fresh ones
    let lines = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert_eq!(
        lines, 3,
        "expected one fresh entry after the two seeded lines"
    );
}

#[test]
fn cache_path_can_come_from_the_environment() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = tmp.path().join("env.jsonl");
    let certs = tmp.path().join("certs");
    let out = dern()
        .args([
            "verify",
            "--max-vertices",
            "4",
            "--cert-dir",
            certs.to_str().unwrap(),
        ])
        .env("DERN_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(cache.exists(), "cache file not created from DERN_CACHE");
}

#[test]
fn confusers_filter_by_overlap() {
    let all = run(&["confusers", "dbroom:1,2,4"]);
    assert!(all.status.success());
    let all_lines = stdout_text(&all).lines().count();
    assert!(all_lines > 1);

    let top = run(&["confusers", "dbroom:1,2,4", "--min-overlap", "4"]);
    let top_text = stdout_text(&top);
    let top_lines: Vec<&str> = top_text.lines().collect();
    assert_eq!(top_lines.len(), 1, "one confuser shares four decards");
    assert!(top_lines[0].ends_with(" 4"));

    let none = run(&["confusers", "dbroom:1,2,4", "--min-overlap", "5"]);
    assert!(none.status.success());
    assert_eq!(stdout_text(&none), "");
}

#[test]
fn extensions_list_the_unique_completion() {
    let out = run(&["extensions", "CR", "--degree", "2"]);
    assert!(out.status.success());
    let expected = dedeck::canonical_form(&dedeck::cycle(4).unwrap());
    assert_eq!(stdout_text(&out), format!("{}\n", expected.as_str()));
}

#[test]
fn lemma1_table_marks_each_edge() {
    let out = run(&["lemma1", "dbroom:3,4,2"]);
    assert!(out.status.success());
    let text = stdout_text(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "u v d(e) unique_completion");
    assert_eq!(lines.len(), 9, "eight edges");
    assert_eq!(lines.iter().filter(|l| l.ends_with(" yes")).count(), 4);
    assert_eq!(lines.iter().filter(|l| l.ends_with(" no")).count(), 4);
}
