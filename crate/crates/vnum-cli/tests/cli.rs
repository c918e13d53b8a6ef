//! End-to-end tests of the `vnum` binary: file formats, report contents,
//! exit codes, JSON round-tripping, and scan determinism.

use std::path::Path;
use std::process::{Command, Output};

const C4_IDEAL: &str = "vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n";
const C4_GRAPH: &str = "graph: 4\n1 2\n2 3\n3 4\n1 4\n";

fn vnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("test file written");
    path.display().to_string()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn invariants_text_report_for_the_four_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c4.ideal", C4_IDEAL);
    let out = vnum(&["invariants", &file]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("v-number: 1"));
    assert!(text.contains("unmixed"));
    assert!(text.contains("regularity 1"));
    assert!(text.contains("cohen_macaulay false"));
    assert!(text.contains("total:  1  4  4  1"));
}

#[test]
fn invariants_json_matches_graph_and_ideal_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let ideal_file = write(dir.path(), "c4.ideal", C4_IDEAL);
    let graph_file = write(dir.path(), "c4.graph", C4_GRAPH);
    let from_ideal = stdout_json(&vnum(&["invariants", &ideal_file, "--json"]));
    let from_graph = stdout_json(&vnum(&["invariants", &graph_file, "--json"]));

    assert_eq!(from_ideal["input"]["format"], "ideal");
    assert_eq!(from_graph["input"]["format"], "graph");
    assert_eq!(
        from_ideal["input"]["generators"],
        from_graph["input"]["generators"]
    );
    assert_eq!(from_ideal["v_number"]["v"], 1);
    assert_eq!(from_ideal["unmixed"], true);
    assert_eq!(from_ideal["summary"]["regularity"], 1);
    assert_eq!(from_ideal["summary"]["cohen_macaulay"], false);
    assert_eq!(from_ideal["height"], 2);
    assert_eq!(from_ideal["field"], "Q");
}

#[test]
fn emitted_generator_strings_reparse_to_the_same_canonical_form() {
    let dir = tempfile::tempdir().unwrap();
    // Redundant, unsorted, with juxtaposed and caret-power spellings.
    let messy = "vars: x y z\ny^2*x\nx*y^2*z\nz*z*y\nx^2\nx^2*y\n";
    let file = write(dir.path(), "messy.ideal", messy);
    let first = stdout_json(&vnum(&["invariants", &file, "--json"]));
    let gens: Vec<String> = first["input"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap().to_string())
        .collect();

    let rewritten = format!("vars: x y z\n{}\n", gens.join("\n"));
    let second_file = write(dir.path(), "canonical.ideal", &rewritten);
    let second = stdout_json(&vnum(&["invariants", &second_file, "--json"]));
    assert_eq!(first["input"]["generators"], second["input"]["generators"]);
    assert_eq!(first["v_number"], second["v_number"]);
    assert_eq!(first["summary"], second["summary"]);
}

#[test]
fn prime_ideal_reports_v_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "prime.ideal", "vars: x1 x2 x3\nx1\nx2\n");
    let report = stdout_json(&vnum(&["invariants", &file, "--json"]));
    assert_eq!(report["v_number"]["v"], 0);
    assert_eq!(report["v_number"]["is_prime"], true);
}

#[test]
fn frobenius_reports_for_curated_examples() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.ideal", C4_IDEAL);
    let report = stdout_json(&vnum(&["frobenius", &c4, "--q", "3"]));
    assert_eq!(report["v_of_bracket"], 7);
    assert_eq!(report["lower_bound_equality"], true);
    assert_eq!(report["upper_bound_holds"], true);
    assert_eq!(report["bracket_generators"], 4);

    let prime = write(dir.path(), "prime.ideal", "vars: x1 x2 x3\nx1\nx2\n");
    let report = stdout_json(&vnum(&["frobenius", &prime, "--q", "4"]));
    assert_eq!(report["v_of_bracket"], 6);
    assert_eq!(report["alpha_q"], 6);

    let mixed = write(dir.path(), "mixed.ideal", "vars: x y\nx^2\nx*y\n");
    let report = stdout_json(&vnum(&["frobenius", &mixed, "--q", "2"]));
    assert_eq!(report["unmixed"], false);
    assert_eq!(report["lower_bound_holds"], true);
    assert_eq!(report["alpha_le_v_of_bracket"], true);
}

#[test]
fn frobenius_rejects_q_below_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c4.ideal", C4_IDEAL);
    let out = vnum(&["frobenius", &file, "--q", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn betti_table_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ci.ideal", "vars: x y\nx^2\ny^3\n");
    let out = vnum(&["betti", &file]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total:  1  2  1"));

    let json = stdout_json(&vnum(&["betti", &file, "--json"]));
    assert_eq!(json["entries"]["0,0"], 1);
    assert_eq!(json["entries"]["1,2"], 1);
    assert_eq!(json["entries"]["1,3"], 1);
    assert_eq!(json["entries"]["2,5"], 1);
    assert_eq!(json["regularity"], 3);
    assert_eq!(json["proj_dim"], 2);

    let out = vnum(&["betti", &file, "--field", "5"]);
    assert!(out.status.success());
}

#[test]
fn every_suite_passes_a_short_run_and_prints_its_seed() {
    for suite in [
        "frobenius_formula",
        "upper_bound",
        "alpha_ceiling",
        "monotone",
        "alpha_sandwich",
        "gorenstein_eq",
        "level_ineq",
        "artinian_level_iff",
        "polarization_remark",
    ] {
        let out = vnum(&["verify", "--suite", suite, "--seed", "5", "--count", "6"]);
        assert!(
            out.status.success(),
            "suite {suite} failed: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["suite"], suite);
        assert_eq!(report["seed"], 5);
        assert_eq!(report["cases_run"], report["cases_passed"]);
        assert!(report["cases_run"].as_u64().unwrap() > 0);
        assert!(report["first_failure"].is_null());
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert!(stderr.contains("seed 5"), "seed missing from: {stderr}");
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = vnum(&["verify", "--suite", "no_such_suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown suite"));
}

#[test]
fn scan_runs_are_deterministic_and_count_zero_is_empty() {
    let strip = |out: &Output| -> serde_json::Value {
        let mut v = stdout_json(out);
        v.as_object_mut().unwrap().remove("wall_ms");
        v
    };
    let a = strip(&vnum(&["scan-q52", "--seed", "11", "--count", "40"]));
    let b = strip(&vnum(&["scan-q52", "--seed", "11", "--count", "40"]));
    assert_eq!(a, b);
    assert_eq!(a["attempts"], 40);
    assert!(a["cases_run"].as_u64().unwrap() > 0);

    let empty = strip(&vnum(&["scan-q52", "--seed", "11", "--count", "0"]));
    assert_eq!(empty["attempts"], 0);
    assert_eq!(empty["cases_run"], 0);
    assert_eq!(empty["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn error_exit_codes_are_distinguished() {
    let dir = tempfile::tempdir().unwrap();

    // Parse error with a line number: usage/parse class (2).
    let bad = write(dir.path(), "bad.ideal", "vars: x y\nx^2\nbad^^\n");
    let out = vnum(&["invariants", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));

    // Missing file: also class 2.
    let out = vnum(&["invariants", dir.path().join("absent.ideal").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Resource cap: class 3.
    let heavy = write(dir.path(), "heavy.ideal", "vars: x y\nx^3\ny^4\n");
    let out = vnum(&["betti", &heavy, "--max-polarized-vars", "3"]);
    assert_eq!(out.status.code(), Some(3));
}
