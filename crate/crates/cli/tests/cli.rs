//! End-to-end tests of the command-line surface: golden outputs, exit
//! codes, round trips, and determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mqsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mqsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn mqsym_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mqsym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_f_golden() {
    let out = mqsym(&["compute-f", "--bases", "[[1],[2]]", "--n", "2"]);
    assert_eq!(stdout(&out).trim(), "2*M[1,1]");

    let out = mqsym(&["compute-f", "--bases", "[[1],[2],[3]]", "--n", "3", "--basis", "l"]);
    assert_eq!(stdout(&out).trim(), "3*L[1,1,1] + 3*L[1,2]");

    // The five-parallel-element freedom matroid.
    let out = mqsym(&["compute-f", "--sigma", "01111"]);
    let text = stdout(&out);
    assert!(text.contains("5*M[1,4]"), "got {text}");
    assert!(text.starts_with("120*M[1,1,1,1,1]"), "got {text}");
}

#[test]
fn compute_fstar_and_phi() {
    let out = mqsym(&["compute-fstar", "--bases", "[[1],[2]]", "--n", "2", "--basis", "l"]);
    assert_eq!(stdout(&out).trim(), "2*L[2]");

    let out = mqsym(&["phi", "--bases", "[[1],[2]]", "--n", "2"]);
    assert_eq!(stdout(&out).trim(), "2*C(m,2)");
    let out = mqsym(&["phi", "--bases", "[[1],[2]]", "--n", "2", "--star"]);
    assert_eq!(stdout(&out).trim(), "2*C(m,2) + 2*C(m,1)");
}

#[test]
fn tutte_dual_freedom() {
    let out = mqsym(&["tutte", "--bases", "[[1],[2]]", "--n", "2"]);
    assert_eq!(stdout(&out).trim(), "x + y");

    let out = mqsym(&["dual", "--bases", "[[1,2],[1,3]]", "--n", "3"]);
    assert_eq!(stdout(&out).trim(), r#"{"n":3,"bases":[[2],[3]]}"#);

    let out = mqsym(&["freedom", "--sigma", "01"]);
    assert_eq!(stdout(&out).trim(), r#"{"n":2,"bases":[[1],[2]]}"#);
}

#[test]
fn matroid_json_round_trips_through_stdin() {
    let json = r#"{"n":4,"bases":[[1,2],[1,3],[2,3],[1,4],[2,4],[3,4]]}"#;
    let out = mqsym_stdin(&["compute-f"], json);
    let direct = mqsym(&[
        "compute-f",
        "--bases",
        "[[1,2],[1,3],[2,3],[1,4],[2,4],[3,4]]",
        "--n",
        "4",
    ]);
    assert_eq!(stdout(&out), stdout(&direct));
}

#[test]
fn enumerate_emits_parseable_catalog_lines() {
    let out = mqsym(&["enumerate", "--n", "4", "--rank", "2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("bases").is_some());
    }
    // Catalog lines feed straight back into hilbert-basis.
    let connected = mqsym(&["enumerate", "--n", "4", "--rank", "2", "--connected"]);
    let basis = mqsym_stdin(&["hilbert-basis", "--file", "-"], &stdout(&connected));
    assert_eq!(stdout(&basis).lines().count(), 1);
}

#[test]
fn hilbert_basis_rank2_instance() {
    let out = mqsym(&["hilbert-basis", "--rank2-n", "5"]);
    let text = stdout(&out);
    let mut lines: Vec<&str> = text.lines().collect();
    lines.sort_unstable();
    assert_eq!(lines, vec!["lambda(2,2,1)", "lambda(3,1,1)"]);
}

#[test]
fn quotient_project_and_split_search() {
    let out = mqsym(&["quotient-project", "--bases", "[[1],[2]]", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rank"], 1);

    let out = mqsym(&[
        "split-search",
        "--bases",
        "[[1,2],[1,3],[2,3],[1,4],[2,4],[3,4]]",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], 3);
}

#[test]
fn decomp_check_exit_codes() {
    // A valid split certificate verifies.
    let u24 = r#"{"n":4,"bases":[[1,2],[1,3],[2,3],[1,4],[2,4],[3,4]]}"#;
    let no12 = r#"{"n":4,"bases":[[1,3],[2,3],[1,4],[2,4],[3,4]]}"#;
    let no34 = r#"{"n":4,"bases":[[1,2],[1,3],[2,3],[1,4],[2,4]]}"#;
    let good = format!(r#"{{"parent":{u24},"pieces":[{no12},{no34}]}}"#);
    let out = mqsym_stdin(&["decomp-check"], &good);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "verified");

    // Covering pieces violating the valuation identity: exit 3.
    let point = r#"{"n":4,"bases":[[1,2]]}"#;
    let broken = format!(r#"{{"parent":{u24},"pieces":[{no12},{point}]}}"#);
    let out = mqsym_stdin(&["decomp-check"], &broken);
    assert_eq!(out.status.code(), Some(3));

    // Pieces that do not cover: exit 1.
    let invalid = format!(r#"{{"parent":{u24},"pieces":[{no12}]}}"#);
    let out = mqsym_stdin(&["decomp-check"], &invalid);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_and_input_errors() {
    // Eleven elements exceed the default invariant budget: exit 2.
    let out = mqsym(&["compute-f", "--sigma", "01111111111"]);
    assert_eq!(out.status.code(), Some(2));

    // Exchange-axiom failure: exit 1, with a witness in the message.
    let out = mqsym(&["compute-f", "--bases", "[[1,3],[2,3],[2,4]]", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exchange"));

    // Two input sources: exit 1.
    let out = mqsym(&["compute-f", "--bases", "[[1]]", "--n", "1", "--sigma", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zonotope_and_checks() {
    let out = mqsym(&["zonotope", "--graph", "2; 1-2"]);
    assert_eq!(stdout(&out).trim(), "2*M[1,1]");

    let out = mqsym(&["zonotope", "--graph", "3; 1-2, 2-3, 1-3", "--basis", "l"]);
    assert_eq!(stdout(&out).trim(), "6*L[1,1,1]");

    let out = mqsym(&["reciprocity-check", "--bases", "[[1,2],[1,3],[2,3]]", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = mqsym(&["hopf-check", "--bases", "[[1,2],[1,3],[2,3]]", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn appendix_lu_shows_the_degree_three_matrices() {
    let out = mqsym(&["appendix-lu", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["a"][0], "1 0 0 0");
    assert_eq!(v["a"][1], "2 1 1 0");
    assert_eq!(v["l"][3], "1 1 0 1");
    assert_eq!(v["u"][1], "0 1 1 0");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["compute-f", "--sigma", "010101"],
        vec!["enumerate", "--n", "5", "--rank", "2"],
        vec!["split-search", "--sigma", "0101"],
    ] {
        let a = stdout(&mqsym(&args));
        let b = stdout(&mqsym(&args));
        assert_eq!(a, b, "{args:?}");
    }
}
