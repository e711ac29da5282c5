use std::collections::BTreeSet;
use std::process::{Command, Output};

use num_bigint::BigInt;
use quartic_thue::enumerate::{enumerate_range, BConvention};
use quartic_thue::thue::brute_solve;
use quartic_thue::QuarticForm;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic-thue")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn pairs(v: &Value) -> BTreeSet<(i64, i64)> {
    v.as_array().unwrap().iter().map(|p| (p[0].as_i64().unwrap(), p[1].as_i64().unwrap())).collect()
}

#[test]
fn solve_emits_solutions_and_certificate() {
    let out = run(&["solve", "--form", "1,0,0,0,-2", "--h", "1"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(pairs(&v["plus"]), BTreeSet::from([(1, 0)]));
    assert_eq!(pairs(&v["minus"]), BTreeSet::from([(1, 1), (1, -1)]));
    assert_eq!(v["certificate"]["method"], "convergents");
    assert_eq!(v["certificate"]["roots"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_matches_library() {
    let out = run(&["enumerate", "--i-min", "-48", "--i-max", "-3"]);
    assert!(out.status.success());
    let got: Vec<(i64, String)> = json_lines(&out)
        .iter()
        .map(|v| (v["I"].as_i64().unwrap(), v["form"].to_string().replace(' ', "")))
        .collect();
    let want: Vec<(i64, String)> = enumerate_range(-48, -3, BConvention::Standard)
        .unwrap()
        .into_iter()
        .map(|(i, f)| (i, f.to_string()))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn small_table_agrees_with_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("forms.jsonl");
    let out = run(&["table", "--i-min", "-12", "--i-max", "-3", "--results", path.to_str().unwrap()]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    let per_form: Vec<Value> =
        std::fs::read_to_string(&path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(per_form.len(), 6);
    let total: u64 = rows.iter().map(|r| r["forms"].as_u64().unwrap()).sum();
    assert_eq!(total, 6);
    for rec in &per_form {
        assert!(rec["error"].is_null());
        let f: QuarticForm = rec["form"].to_string().parse().unwrap();
        let brute = brute_solve(&f, &BigInt::from(1), 200);
        let plus: BTreeSet<(i64, i64)> =
            brute.plus.iter().map(|p| (p.x.clone().try_into().unwrap(), p.y.clone().try_into().unwrap())).collect();
        let minus: BTreeSet<(i64, i64)> =
            brute.minus.iter().map(|p| (p.x.clone().try_into().unwrap(), p.y.clone().try_into().unwrap())).collect();
        assert_eq!(pairs(&rec["plus"]), plus, "{f}");
        assert_eq!(pairs(&rec["minus"]), minus, "{f}");
    }
}

#[test]
fn empty_table() {
    let out = run(&["table", "--i-min", "-3", "--i-max", "-3"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn table_is_independent_of_thread_count() {
    let one = run(&["--jobs", "1", "table", "--i-min", "-90", "--i-max", "-3"]);
    let two = run(&["--jobs", "3", "table", "--i-min", "-90", "--i-max", "-3"]);
    assert!(one.status.success() && two.status.success());
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn csv_output() {
    let out = run(&["--format", "csv", "threshold", "--k", "4", "--h", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,h,j_min,I_max,bound,binding,open_boundary"));
    let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i_max: f64 = fields[3].parse().unwrap();
    assert!((-2630.0..=-2570.0).contains(&i_max));
}

#[test]
fn elliptic_subcommands() {
    let v = &json_lines(&run(&["pell", "--d", "61"]))[0];
    assert_eq!((v["x"].as_u64(), v["y"].as_u64(), v["norm"].as_i64()), (Some(29718), Some(3805), Some(-1)));
    let v = &json_lines(&run(&["curve-points", "--n", "3", "--xmax", "1000"]))[0];
    assert_eq!(pairs(&v["points"]), BTreeSet::from([(0, 0), (1, 2), (3, 6), (12, 42)]));
    let v = &json_lines(&run(&["tzanakis", "--d", "2", "--k", "1", "--s", "3", "--t", "2"]))[0];
    assert_eq!(v["J"].as_i64(), Some(0));
    assert!(v["I"].as_i64().unwrap() < 0);
    let v = &json_lines(&run(&["bound", "--i", "-2700", "--h", "1"]))[0];
    assert_eq!(v["bound"].as_u64(), Some(8));
}

#[test]
fn errors_exit_with_one() {
    let out = run(&["pell", "--d", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not squarefree"));
    let out = run(&["solve", "--form", "1,2,3"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "phi"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines[0]["status"], "PASS");
    assert_eq!(run(&["verify", "invariants", "--forms", "2000"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "thresholds"]).status.code(), Some(0));
    // no form in this range satisfies the gap hypotheses
    assert_eq!(run(&["verify", "gap", "--i-min", "-12", "--i-max", "-3"]).status.code(), Some(2));
    assert_ne!(run(&["verify", "nonsense"]).status.code(), Some(0));
}
