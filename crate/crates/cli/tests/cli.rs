use std::path::Path;
use std::process::{Command, Output};

use linetw::report::BrambleReport;

fn linetw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linetw")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn construct_then_validate_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let td = path(dir.path(), "k5.td");
    let o = linetw(&["construct", "--spec", "5", "--flavour", "kn", "--out", &td]);
    assert_eq!(o.status.code(), Some(0));
    let o = linetw(&["validate", "--spec", "5", "--flavour", "kn", "--td", &td]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("valid yes"), "{text}");
    assert!(text.contains("width 7"), "{text}");
}

#[test]
fn validate_against_a_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let (base, lg, td) = (
        path(dir.path(), "g.gr"),
        path(dir.path(), "lg.gr"),
        path(dir.path(), "lg.td"),
    );
    assert!(linetw(&["gen", "--spec", "2,2,2", "--out", &base]).status.success());
    assert!(linetw(&["linegraph", "--graph", &base, "--out", &lg]).status.success());
    assert_eq!(
        std::fs::read_to_string(format!("{lg}.map")).unwrap().lines().count(),
        12
    );
    assert!(
        linetw(&["construct", "--spec", "2,2,2", "--flavour", "blue", "--out", &td])
            .status
            .success()
    );
    assert_eq!(
        std::fs::read_to_string(format!("{td}.partition"))
            .unwrap()
            .lines()
            .count(),
        6
    );
    let o = linetw(&["validate", "--graph", &lg, "--td", &td, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["width"], 7);
}

#[test]
fn uncovered_edge_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let (gr, td) = (path(dir.path(), "p.gr"), path(dir.path(), "p.td"));
    std::fs::write(&gr, "p tw 3 2\n1 2\n2 3\n").unwrap();
    std::fs::write(&td, "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n").unwrap();
    let o = linetw(&["validate", "--graph", &gr, "--td", &td]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("edge coverage FAILED edge 2 3"), "{text}");
    assert!(text.contains("valid no"), "{text}");
}

#[test]
fn verify_regular_spec() {
    let o = linetw(&["verify", "--spec", "2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "formula 7",
        "construction 7",
        "oracle tw 7",
        "oracle pw 7",
        "bramble order - 1 7",
        "result ok",
    ] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }
}

#[test]
fn verify_json_and_skips() {
    let o = linetw(&["verify", "--spec", "7", "--flavour", "kn", "--budget", "12", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["formula"], 14);
    assert_eq!(v["construction_width"], 14);
    assert!(v["oracle_tw"].is_null());
    assert_eq!(v["bramble_order"], 15);
}

#[test]
fn oracle_output() {
    let o = linetw(&["oracle", "--spec", "4", "--flavour", "kn"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "tw 4");
    assert!(lines[1].starts_with("witness "));
    assert_eq!(lines[1].split(' ').count(), 7);
    assert_eq!(lines[2], "pw 4");
    let o = linetw(&["oracle", "--spec", "2,2", "--width", "pw", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pw"]["value"], 2);
    assert!(v["tw"].is_null());
}

#[test]
fn bramble_report_json() {
    let o = linetw(&["bramble", "--spec", "5", "--flavour", "kn"]);
    assert_eq!(o.status.code(), Some(0));
    let r: BrambleReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.n, r.k, r.v, r.min_order), (5, 5, 1, 8));
    let o = linetw(&["bramble", "--spec", "2,3", "--vertex", "3"]);
    let r: BrambleReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.v, 3);
    assert_eq!(
        linetw(&["bramble", "--spec", "2,3", "--vertex", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        linetw(&["oracle", "--spec", "7", "--flavour", "kn", "--budget", "10"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(linetw(&["bramble", "--spec", "3,3,3,3"]).status.code(), Some(3));
    assert_eq!(linetw(&["gen", "--spec", "2,,3"]).status.code(), Some(2));
    assert_eq!(
        linetw(&["gen", "--spec", "2,3", "--flavour", "kn"]).status.code(),
        Some(2)
    );
    assert_eq!(
        linetw(&["validate", "--graph", "/nonexistent.gr", "--td", "/nonexistent.td"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(linetw(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(linetw(&["--help"]).status.code(), Some(0));
    assert_eq!(
        linetw(&["construct", "--spec", "2,3", "--flavour", "blue"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let (gr, td) = (path(dir.path(), "g.gr"), path(dir.path(), "g.td"));
    std::fs::write(&gr, "p tw 2 1\n1 2\n").unwrap();
    std::fs::write(&td, "s td 1 3 3\nb 1 1 2 3\n").unwrap();
    assert_eq!(
        linetw(&["validate", "--graph", &gr, "--td", &td]).status.code(),
        Some(2)
    );
    std::fs::write(&td, "s td 1 2 2\nb 1 1 2\n").unwrap();
    assert_eq!(
        linetw(&["validate", "--graph", &gr, "--td", &td]).status.code(),
        Some(0)
    );
}

#[test]
fn outputs_are_deterministic_and_canonical() {
    let a = linetw(&["construct", "--spec", "3,2,2"]);
    let b = linetw(&["construct", "--spec", "3,2,2"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let (td, n) = linetw::td::parse_td(&text).unwrap();
    assert_eq!(linetw::td::write_td(&td, n), text);
    let g = stdout(&linetw(&["gen", "--spec", "3,2,2"]));
    assert_eq!(linetw::gr::write_gr(&linetw::gr::parse_gr(&g).unwrap()), g);
}
