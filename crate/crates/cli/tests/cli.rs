use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn circarc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circarc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn delta_of_a_generated_cycle_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    let path = path.to_str().unwrap();
    let out = circarc(&["gen", "cycle_tiling", "-p", "rho=5", "-o", path]);
    assert!(out.status.success());
    let out = circarc(&["delta", path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["delta"], "5/4");
    assert_eq!(j["saturated"], false);
}

#[test]
fn rho_of_the_full_circle() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "full.txt", "a full\n");
    let out = circarc(&["rho", &path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rho"], 1);
}

#[test]
fn verify_passes_on_generated_families() {
    for spec in [
        "gen:cycle_tiling,rho=6",
        "gen:wheel7",
        "gen:extremal_main,rho=6",
        "gen:extremal_proper,rho=4",
        "gen:rho2_delta2",
        "gen:rho2_proper",
        "gen:example_cx,rho=6",
        "gen:random_arcs,n=8",
        "gen:random_graph,n=7,p=0.4",
    ] {
        let out = circarc(&["verify", spec, "--json"]);
        assert_eq!(out.status.code(), Some(0), "{spec}: {}", String::from_utf8_lossy(&out.stdout));
        let j = json(&out);
        assert!(j["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"), "{spec}");
    }
}

#[test]
fn rationals_are_strings() {
    let out = circarc(&["classify", "gen:extremal_main,rho=6", "--json"]);
    let j = json(&out);
    assert_eq!(j["lower"], "3/2");
    assert_eq!(j["upper"], "3/1");
    assert_eq!(j["rho"], 6);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "a 0 1/2\nb 1/4\n");
    assert_eq!(circarc(&["delta", &bad]).status.code(), Some(2));
    let graph = write(dir.path(), "g.txt", "3\n0 1\n1 2\n");
    assert_eq!(circarc(&["rho", &graph]).status.code(), Some(2));
    assert_eq!(circarc(&["delta", "gen:nope"]).status.code(), Some(2));
    assert_eq!(circarc(&["delta", "/does/not/exist"]).status.code(), Some(2));
    let out = circarc(&["delta", &bad, "--json"]);
    assert_eq!(json(&out)["exit"], 2);
}

#[test]
fn oracle_refuses_large_inputs() {
    let out = circarc(&["oracle", "gen:extremal_main,rho=6"]);
    assert_eq!(out.status.code(), Some(3));
    let out = circarc(&["oracle", "gen:cycle_tiling,rho=7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["delta"], "7/4");
    assert_eq!(j["rho"], 7);
}

#[test]
fn saturation_exits_5_with_a_report() {
    let grid = "9\n0 1\n1 2\n3 4\n4 5\n6 7\n7 8\n0 3\n3 6\n1 4\n4 7\n2 5\n5 8\n";
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "grid.txt", grid);
    let out = circarc(&["delta", &path, "--geodesic-cap", "2", "--json"]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(json(&out)["saturated"], true);
    let out = circarc(&["delta", &path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    // the outer 8-cycle is isometric
    assert_eq!(json(&out)["delta"], "2/1");
    let oracle = circarc(&["oracle", &path, "--json"]);
    assert_eq!(json(&oracle)["delta"], "2/1");
}

#[test]
fn graph_writers() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("comp.txt");
    let out_path = out_path.to_str().unwrap();
    let out = circarc(&["complement", "gen:cycle_tiling,rho=5", "-o", out_path]);
    assert!(out.status.success());
    // the complement of C5 is C5
    let out = circarc(&["delta", out_path, "--json"]);
    assert_eq!(json(&out)["delta"], "5/4");
    let out = circarc(&["line", "gen:cycle_tiling,rho=6", "--json"]);
    let j = json(&out);
    assert_eq!((j["n"].as_u64(), j["m"].as_u64()), (Some(6), Some(6)));
    let out = circarc(&["build", "gen:cycle_tiling,rho=4"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "4\n0 1\n0 3\n1 2\n2 3\n");
}

#[test]
fn classify_with_cycle_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "iv.txt", "a 0 1/4\nb 1/8 3/8\nc 3/16 5/16\nd 3/8 1/2\n");
    let out = circarc(&["classify", &path, "--cycle-cap", "1000", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["interval"], j["interval_by_cycles"]);
    assert_eq!(j["interval"]["predicted_delta"], "3/4");
    let dense = write(dir.path(), "k6.txt", &(0..6).map(|i| format!("v{i} 0 1/{}\n", i + 2)).collect::<String>());
    let out = circarc(&["classify", &dense, "--cycle-cap", "10", "--json"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn same_seed_same_output() {
    let a = circarc(&["gen", "random_arcs", "-p", "n=10", "--seed", "9"]);
    let b = circarc(&["gen", "random_arcs", "-p", "n=10", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}
