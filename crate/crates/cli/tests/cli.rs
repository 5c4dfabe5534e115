use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn distspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_complete_graph() {
    let out = distspec(&["compute", "C~"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["rho"].as_f64(), Some(3.0));
    assert_eq!(rec["edge_connectivity"], 3);
    assert_eq!(rec["n"], 4);
}

#[test]
fn compute_path_on_three_vertices() {
    let out = distspec(&["compute", "Bg"]);
    assert_eq!(out.status.code(), Some(0));
    let rho = json_lines(&out)[0]["rho"].as_f64().unwrap();
    assert!((rho - 2.7320508).abs() < 1e-7);
    assert!((rho - (1.0 + 3f64.sqrt())).abs() < 1e-11);
}

#[test]
fn compute_edge_list_matches_graph6() {
    let from_edges = distspec(&["compute", "--edges", "0-1,1-2"]);
    let from_g6 = distspec(&["compute", "Bg"]);
    assert_eq!(from_edges.stdout, from_g6.stdout);
}

#[test]
fn compute_csv_header_is_fixed() {
    let out = distspec(&["compute", "C~", "Bg", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "graph6,n,edges,rho,residual,iterations,edge_connectivity,perron_vector"
    );
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("C~,4,6,3.0,"));
}

#[test]
fn malformed_corpus_line_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    fs::write(&path, "C~\nBg\nnot graph6 at all\n").unwrap();
    let out = distspec(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn disconnected_input_is_rejected() {
    let out = distspec(&["compute", "--edges", "0-1,2-3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("disconnected"));
}

#[test]
fn search_confirms_extremal_graph() {
    let out = distspec(&["search", "--n", "6", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["matches_kpq"], true);
    assert_eq!(rec["class_size"], 41);
    let keys: Vec<&String> = rec.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "n",
            "r",
            "class_size",
            "min_rho",
            "runner_up_rho",
            "uniqueness_gap",
            "minimizer_graph6",
            "matches_kpq"
        ]
    );
}

#[test]
fn search_rejects_r_out_of_range() {
    let out = distspec(&["search", "--n", "4", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("r <= n - 2"));
}

#[test]
fn search_over_written_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("order8.g6");
    let enumerated = distspec(&["enumerate", "--n", "8", "--out", corpus.to_str().unwrap()]);
    assert_eq!(enumerated.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&corpus).unwrap().lines().count(), 11117);
    let out = distspec(&[
        "search",
        "--n",
        "8",
        "--r",
        "1",
        "--corpus",
        corpus.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["matches_kpq"], true);

    let builtin = distspec(&["search", "--n", "8", "--r", "1"]);
    assert_eq!(builtin.stdout, out.stdout);
}

#[test]
fn search_all_r_is_thread_independent() {
    let one = distspec(&["search", "--n", "7", "--threads", "1"]);
    let four = distspec(&["search", "--n", "7", "--threads", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(json_lines(&one).len(), 5);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn check_reports_bridge_instance() {
    let out = distspec(&[
        "check", "bridge", "--n1", "5", "--n2", "6", "--r", "3", "--t", "1", "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["transformation"]["holds"], true);
    assert_eq!(rec["transformation"]["tilde_matches_kpq"], true);
    assert_eq!(rec["hub_equation"]["hub_bound_holds"], true);
    assert_eq!(rec["params"]["cross_edges"].as_array().unwrap().len(), 2);
}

#[test]
fn check_bridge_with_explicit_cross_edges() {
    let out = distspec(&[
        "check", "bridge", "--n1", "4", "--n2", "5", "--r", "2", "--t", "1", "--cross", "3-2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let bad = distspec(&[
        "check", "bridge", "--n1", "4", "--n2", "5", "--r", "2", "--t", "1", "--cross", "1-2",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn check_edge_on_a_bridge_is_a_usage_error() {
    let ok = distspec(&["check", "edge", "Bg", "--u", "0", "--v", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    let bridge = distspec(&["check", "edge", "Bg", "--u", "0", "--v", "1"]);
    assert_eq!(bridge.status.code(), Some(2));
}

#[test]
fn verify_all_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = distspec(&[
        "verify-all",
        "--max-n",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("cut_order_bound"));
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["config"]["max_n"], 5);
}

#[test]
fn verify_all_is_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, threads) in [(&a, "1"), (&b, "4")] {
        let out = distspec(&[
            "verify-all",
            "--max-n",
            "6",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn injected_fault_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fault.json");
    let out = distspec(&[
        "verify-all",
        "--max-n",
        "4",
        "--inject-fault",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(distspec(&["search", "--bogus"]).status.code(), Some(2));
}
