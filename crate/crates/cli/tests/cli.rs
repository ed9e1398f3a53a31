use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn invsegal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invsegal"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = invsegal(&all);
    let report = serde_json::from_slice(&out.stdout).expect("a JSON report");
    (out.status.code().expect("exited"), report)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn segal_on_an_input_file_passes() {
    let z3 = data("z3.json");
    let (code, report) = json(&["segal", "--input", &z3, "--nmax", "4"]);
    assert_eq!(code, 0);
    assert_eq!(report["passed"], true);
    assert_eq!(report["suite"], "segal");
    assert_eq!(report["inputs"][0]["name"], "Z/3");
    assert_eq!(report["inputs"][0]["sha256"].as_str().map(str::len), Some(64));
    let verdicts = report["checks"][0]["detail"]["verdict"].as_array().unwrap();
    let levels: Vec<u64> = verdicts.iter().map(|v| v["level"].as_u64().unwrap()).collect();
    assert_eq!(levels, [0, 2, 3, 4]);
}

#[test]
fn bousfield_failures_carry_witnesses_and_reproduce() {
    let (code, report) = json(&["bousfield", "--catalog", "monoids3", "--nmax", "3"]);
    assert_eq!(code, 1);
    let checks = report["checks"].as_array().unwrap();
    let failing: Vec<&Value> = checks.iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(failing.len(), 7);
    for c in &failing {
        assert!(c["detail"]["witness"].is_object());
        assert!(c["reproduce"].is_string());
    }

    // rerunning the reproduction flags gives the same failing check
    let first = failing[0];
    let reproduce = first["reproduce"].as_str().unwrap();
    let args: Vec<String> = reproduce.split(' ').map(|s| s.trim_matches('\'').to_string()).collect();
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, again) = json(&args);
    assert_eq!(code, 1);
    assert_eq!(again["checks"][0]["detail"], first["detail"]);
}

#[test]
fn bousfield_matches_groups_exactly() {
    let out = invsegal(&["bousfield", "--catalog", "corpus", "--nmax", "3", "--iff-group"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn xi_accepts_groupoids_and_skips_monoids() {
    let (code, report) = json(&["xi", "--input", &data("pair_groupoid.json"), "--nmax", "3"]);
    assert_eq!(code, 0);
    assert_eq!(report["checks"][0]["input"], "pair");

    let (code, report) = json(&["xi", "--catalog", "monoids3"]);
    assert_eq!(code, 0);
    assert_eq!(report["checks"].as_array().unwrap().len(), 3);
    assert_eq!(report["skipped"].as_array().unwrap().len(), 7);

    let out = invsegal(&["xi", "--input", &data("bool_mul.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gamma_round_trips_over_abelian_monoids() {
    let (code, report) = json(&["gamma", "--roundtrip", "--catalog", "abelian3"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"roundtrip"));
    assert!(!names.contains(&"bousfield_gamma"));

    let (code, report) = json(&["gamma", "--bousfield", "--input", &data("bool_mul.json")]);
    assert_eq!(code, 0);
    assert!(report["checks"][1]["summary"].as_str().unwrap().contains("not a group"));
}

#[test]
fn nerve_dumps_levels() {
    let (code, report) = json(&["nerve", "--input", &data("z3.json"), "--trunc", "2"]);
    assert_eq!(code, 0);
    let dump = &report["checks"][0]["detail"]["dump"];
    assert_eq!(dump["shape"], "invertible");
    assert_eq!(dump["levels"][2]["size"], 9);

    let (code, report) = json(&["nerve", "--free", "1", "--trunc", "2", "--wordbound", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["checks"][0]["detail"]["level_sizes"], serde_json::json!([1, 5, 13]));
}

#[test]
fn hom_counts() {
    let (code, report) = json(&["hom", "idelta", "3", "2"]);
    assert_eq!(code, 0);
    // 2 * C(6, 2) - 3
    assert_eq!(report["checks"][0]["detail"]["count"], 27);
}

#[test]
fn filtrations_report_per_variant() {
    let out = invsegal(&["filtration"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let (code, report) = json(&["filtration", "--variant", "bousfield"]);
    assert_eq!(code, 1);
    let exhaustion = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "exhaustion").unwrap();
    assert_eq!(exhaustion["passed"], false);
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["segal", "--input", &data("truncated.json")],
        vec!["segal", "--input", &data("not_associative.json")],
        vec!["segal", "--input", "/nonexistent/structure.json"],
        vec!["segal", "--catalog", "monoids9"],
        vec!["segal"],
        vec!["segal", "--catalog", "monoids3", "--nmax", "99"],
        vec!["segal", "--bogus"],
        vec!["hom", "delta", "9", "1"],
        vec!["laws", "--nmax", "5"],
    ] {
        let out = invsegal(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let run = || invsegal(&["sweep", "--nmax", "3", "--json", "-"]).stdout;
    let first = run();
    assert!(!first.is_empty());
    assert_eq!(first, run());
    let report: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(report["passed"], true);
    assert!(!String::from_utf8(first).unwrap().contains("elapsed_ms"));
}

#[test]
fn quiet_prints_nothing() {
    let out = invsegal(&["laws", "--nmax", "2", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn json_file_output() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("laws-report.json");
    let out = invsegal(&["laws", "--nmax", "2", "--quiet", "--timings", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report["checks"][0]["elapsed_ms"].is_number());
}
