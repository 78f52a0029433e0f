use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quasihyper"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const S5: &str = "# S5\ndegree 5\n(0 1 2 3 4)\n(0 1)\n";
const Q8: &str = "degree 8\n(0 1 2 3)(4 5 6 7)\n(0 4 2 6)(1 7 3 5)\n";

#[test]
fn hypercenter_of_s5_is_trivial() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "s5.grp", S5);
    let out = run(&["hypercenter", "--class", "N*", "--group", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["group_id"], "s5");
    assert_eq!(r[0]["z_order"], 1);
    assert!(r[0]["trace"].as_array().unwrap().iter().all(|s| s["central"] == false));
}

#[test]
fn info_on_q8() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "q8.grp", Q8);
    let out = run(&["info", "--group", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["order"], 8);
    assert_eq!(r["nilpotent"], true);
    assert_eq!(r["quasinilpotent"], true);
    assert_eq!(r["center_order"], 2);
    assert_eq!(r["chief_series"], serde_json::json!([1, 2, 4, 8]));
}

#[test]
fn emitted_generators_round_trip() {
    let dir = TempDir::new().unwrap();
    let original = write(&dir, "sl.grp", "degree 8\n(0 1 2)(3 4 5)\n(1 3)(2 6)(4 7)\n");
    let out = run(&["info", "--emit-generators", "--group", s(&original)]);
    assert_eq!(out.status.code(), Some(0));
    let again = write(&dir, "again.grp", &String::from_utf8(out.stdout).unwrap());
    let a = quasihyper::parse_group_file(&std::fs::read_to_string(&original).unwrap()).unwrap();
    let b = quasihyper::parse_group_file(&std::fs::read_to_string(&again).unwrap()).unwrap();
    assert_eq!(a.order(), b.order());
    let ea = a.elements(100_000).unwrap();
    let eb = b.elements(100_000).unwrap();
    assert_eq!(ea.perms(), eb.perms());
}

#[test]
fn verify_corollary_on_standard_corpus() {
    let out = run(&["verify-corollary", "--corpus", "standard", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = records(&out);
    assert_eq!(r.len(), 33);
    assert!(r.iter().all(|x| x["equal"] == true && x["class"] == "N*"));
    assert!(r.iter().all(|x| x.get("millis").is_none()));
}

#[test]
fn reports_are_deterministic_without_timings() {
    let args = ["verify-baer", "--corpus", "smoke", "--no-timings"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let timed = records(&run(&["verify-baer", "--corpus", "smoke"]));
    assert!(timed.iter().all(|x| x["millis"].is_u64()));
}

#[test]
fn output_file_and_corpus_file() {
    let dir = TempDir::new().unwrap();
    write(&dir, "v4.grp", "degree 4\n(0 1)(2 3)\n(0 2)(1 3)\n");
    let spec = write(&dir, "c.txt", "s3 symmetric 3\nv4 file v4.grp\nd product s3 v4\n");
    let out_path = dir.path().join("out.jsonl");
    let out = run(&["verify-remark4", "--corpus", s(&spec), "--output", s(&out_path), "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&out_path).unwrap();
    let ids: Vec<String> = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["group_id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ids, vec!["s3", "v4", "d"]);
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.grp", "degree 3\n(0 3)\n");
    let out = run(&["info", "--group", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["info"]).status.code(), Some(2));
    assert_eq!(run(&["hypercenter", "--corpus", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["hypercenter", "--corpus", "smoke", "--class", "Np:4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn resource_bounds_exit_3() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "s5.grp", S5);
    let out = run(&["intersection", "--group", s(&g), "--lattice-bound", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let r = records(&out);
    assert!(r[0]["error"].as_str().unwrap().contains("lattice"));
    let out = run(&["verify-baer", "--group", s(&g), "--enum-bound", "50", "--no-timings"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn intersection_and_s_critical() {
    let out = run(&["intersection", "--corpus", "smoke", "--class", "N", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    let s4 = r.iter().find(|x| x["group_id"] == "S4").unwrap();
    assert_eq!(s4["int_order"], 1);
    assert_eq!(s4["subgroups"], 30);
    let out = run(&["s-critical", "--corpus", "smoke"]);
    let crit: Vec<String> = records(&out)
        .iter()
        .filter(|x| x["s_critical"] == true)
        .map(|x| x["group_id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(crit, vec!["S3"]);
}

#[test]
fn compare_nca_never_fails() {
    let out = run(&["compare-nca", "--corpus", "smoke", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 13);
    assert!(r.iter().all(|x| x["class"] == "Nca" && x["z_order"].is_u64() && x["int_order"].is_u64()));
}
