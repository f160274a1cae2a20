use std::io::Write;
use std::process::{Command, Output, Stdio};

use fext_core::graph::Graph;
use fext_core::emit_graph6;
use serde_json::Value;

fn fext(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fext"))
        .args(args)
        .env_remove("FEXT_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fext");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(input) = stdin {
            pipe.write_all(input.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = fext(&all, stdin);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

fn c5() -> String {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    emit_graph6(&g).unwrap()
}

#[test]
fn extremal_edge_counts() {
    let (code, v) = json(&["extremal", "-n", "11", "-k", "1", "-s", "2"], None);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["e"], 47);
    let (_, v) = json(&["extremal", "-n", "11", "-k", "1", "-s", "6"], None);
    assert_eq!(v["results"][0]["e"], 45);
    let out = fext(&["extremal", "-n", "5", "-k", "1", "-s", "1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s must be at least 2k"));
}

#[test]
fn extremal_sharpness_certificate() {
    let (code, v) = json(&["extremal", "-n", "36", "-k", "1", "-s", "3", "--theorem", "mu"], None);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["sharpness"]["certified"], true);
    assert_eq!(v["summary"]["confirmed"], 1);
}

#[test]
fn polys_f2() {
    let out = fext(&["polys", "f2", "-n", "11", "-k", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1, -29, 212, -288\n");
    let (_, v) = json(&["polys", "phi_B3_case2", "-s", "5", "-k", "1", "--delta", "3"], None);
    assert_eq!(v["results"][0]["n"], 9);
    assert_eq!(v["results"][0]["polynomial"]["matches_built_quotient"], true);
    assert_eq!(fext(&["polys", "f3_q", "-n", "20", "-k", "1"], None).status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let (code, v) = json(&["check", "Bg", "-k", "1"], None);
    assert_eq!(code, 2);
    assert_eq!(v["results"][0]["lemma"]["verdict"], "out_of_domain");

    let (code, v) = json(&["check", &c5(), "-k", "1"], None);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["witness_size"], 3);
    assert_eq!(v["results"][0]["definitional"]["verdict"], "not_extendable");

    let (code, v) = json(&["check", "C~", "-k", "1"], None);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["spectral"]["q"], 6.0);

    let out = fext(&["check", "-", "-k", "1"], Some("# K4\nC~\n"));
    assert_eq!(out.status.code(), Some(0));

    let out = fext(&["check", "C~~", "-k", "1"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_connected_order_eight() {
    let corpus = fext(&["generate", "-n", "8"], None);
    let corpus = String::from_utf8(corpus.stdout).unwrap();
    assert_eq!(corpus.lines().count(), 11117);
    let (code, v) = json(&["sweep", "--theorem", "q1", "-k", "1", "-"], Some(&corpus));
    assert_eq!(code, 0);
    let s = &v["summary"];
    assert_eq!(s["scanned"], 11117);
    assert_eq!(s["counterexamples"], 0);
    assert_eq!(s["equality_cases"], 1);
    assert_eq!(v["results"].as_array().unwrap().len(), 11117);
}

#[test]
fn sweep_reports_bad_lines_and_continues() {
    let (code, v) = json(&["sweep", "--theorem", "edge_1", "-k", "1"], Some("# corpus\nC~\n\nC!!\nDhc\n"));
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["scanned"], 3);
    assert_eq!(v["summary"]["errors"][0]["line"], 4);
}

#[test]
fn grid_q1q2_passes() {
    let (code, v) = json(&["grid", "--lemma", "q1q2", "-k", "1..3", "-n", "40"], None);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["counterexamples"], 0);
    assert_eq!(v["summary"]["passed"], true);
    assert_eq!(fext(&["grid", "--lemma", "q1q2", "-k", "3..1", "-n", "40"], None).status.code(), Some(2));
}

#[test]
fn deterministic_output_across_thread_counts() {
    let corpus: String = ["C~", "Dhc", "Bg", "E~~w"].join("\n");
    let run = |jobs: &str| {
        let out = fext(&["report", "-k", "1", "--format", "json", "--deterministic", "--jobs", jobs], Some(&corpus));
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(run("1"), run("3"));
    let grid = |jobs: &str| fext(&["grid", "--lemma", "q1q3", "-k", "1", "-n", "30", "--format", "json", "--deterministic", "--jobs", jobs], None).stdout;
    assert_eq!(grid("1"), grid("4"));
}

#[test]
fn envelope_schema() {
    let (_, v) = json(&["report"], Some("C~\n"));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "config", "results", "summary"]);
    for k in ["scanned", "confirmed", "equality_cases", "counterexamples"] {
        assert!(v["summary"].get(k).is_some(), "{k}");
    }
    assert_eq!(v["config"]["command"], "report");
    assert_eq!(v["results"][0]["spectral"]["mu"], 3.0);
}

#[test]
fn csv_mirrors_results() {
    let out = fext(&["report", "--format", "csv"], Some("C~\nDhc\n"));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("graph6,line,spectral.connected"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn bad_tolerance_is_rejected() {
    assert_eq!(fext(&["--tol", "0", "check", "C~", "-k", "1"], None).status.code(), Some(2));
}
