//! End-to-end runs of the command line through `cli::run`.

use std::fs;
use std::path::PathBuf;

use lqbetti::cli::{run, EXIT_FALSE, EXIT_INPUT, EXIT_OK};
use lqbetti::io::parse_betti_json;
use lqbetti::linquot::BettiTable;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("lqbetti-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["lqbetti"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const STABLE: &str = "ring x y z : GF(32003) : grevlex\nx^2\nx*y\ny^2\nx*z\n";

#[test]
fn check_certifies_the_four_generator_example() {
    let (code, out, _) = cli(&["check", "--input", &data("four_gens.ideal")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("linear quotients: yes"));
    assert!(out.contains("colon = <x - z, y>"));
    assert!(out.contains("reg = 5, projdim = 2"));
}

#[test]
fn betti_json_round_trips_and_methods_agree() {
    let input = data("four_gens.ideal");
    let (code, out, _) = cli(&[
        "betti", "--input", &input, "--method", "formula", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let formula = parse_betti_json(&out).unwrap();
    let (code, out, _) = cli(&[
        "betti", "--input", &input, "--method", "oracle", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_betti_json(&out).unwrap(), formula);
    let mut expected = BettiTable::new();
    for (i, j, v) in [
        (0, 2, 1),
        (0, 3, 1),
        (0, 5, 2),
        (1, 4, 1),
        (1, 6, 3),
        (2, 7, 1),
    ] {
        expected.set(i, j, v);
    }
    assert_eq!(formula, expected);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["ring"]["field"], "GF(32003)");
    assert_eq!(report["ring"]["order"], "grevlex");
}

#[test]
fn rational_field_flag_is_accepted() {
    let (code, out, _) = cli(&[
        "betti",
        "--input",
        &data("four_gens.ideal"),
        "--field",
        "QQ",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["ring"]["field"], "QQ");
}

#[test]
fn nonminimal_system_is_rejected_unless_allowed() {
    let input = data("nonminimal.ideal");
    let (code, out, _) = cli(&["check", "--input", &input]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("generator 2"));
    let (code, out, _) = cli(&["check", "--input", &input, "--allow-nonminimal"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("not minimal"));
    assert!(!out.contains("reg ="));
}

#[test]
fn search_finds_an_order_for_monomial_input() {
    let input = scratch(
        "search.ideal",
        "ring x y : GF(32003) : grevlex\ny^2\nx^2\nx*y\n",
    );
    let (code, _, _) = cli(&["check", "--input", &input]);
    assert_eq!(code, EXIT_FALSE);
    let (code, out, _) = cli(&[
        "check", "--input", &input, "--order", "search", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["result"]["linear_quotients"], Value::Bool(true));
}

#[test]
fn search_on_general_input_is_an_input_error() {
    let (code, _, err) = cli(&[
        "check",
        "--input",
        &data("four_gens.ideal"),
        "--order",
        "search",
    ]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("monomial"));
}

#[test]
fn parse_errors_report_position() {
    let input = scratch("bad.ideal", "ring x y : GF(32003) : grevlex\nx^2 + \n");
    let (code, _, err) = cli(&["check", "--input", &input]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = cli(&["check", "--input", "/nonexistent/file.ideal"]);
    assert_eq!(code, EXIT_INPUT);
    let inhomogeneous = scratch("inhom.ideal", "ring x y : GF(32003) : grevlex\nx^2 + y\n");
    let (code, _, _) = cli(&["betti", "--input", &inhomogeneous]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn ek_reports_steps_for_stable_input() {
    let input = scratch("stable.ideal", STABLE);
    let (code, out, _) = cli(&["ek", "--input", &input, "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["result"]["stable"], Value::Bool(true));
    assert_eq!(
        report["result"]["steps"][3]["colon"],
        serde_json::json!(["x", "y"])
    );
    let not_stable = scratch("unstable.ideal", "ring x y : GF(32003) : grevlex\ny^2\n");
    assert_eq!(cli(&["ek", "--input", &not_stable]).0, EXIT_FALSE);
    assert_eq!(
        cli(&["ek", "--input", &data("four_gens.ideal")]).0,
        EXIT_INPUT
    );
}

#[test]
fn cwl_detects_the_regular_sequence() {
    let (code, out, _) = cli(&["cwl", "--input", &data("regular_sequence.ideal")]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("first failure at j = 2"), "{out}");
    let (code, _, _) = cli(&["cwl", "--input", &data("four_gens.ideal")]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn compare_runs_over_a_corpus() {
    let (code, out, _) = cli(&["compare", "--corpus", &data("")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("3 file(s), all checks passed: yes"), "{out}");
    let stable = scratch("cmp-stable.ideal", STABLE);
    let (code, out, _) = cli(&[
        "compare",
        "--input",
        &stable,
        "--input",
        &data("four_gens.ideal"),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Eliahou-Kervaire"));
}

#[test]
fn strands_layout_prints_totals() {
    let (code, out, _) = cli(&[
        "betti",
        "--input",
        &data("four_gens.ideal"),
        "--method",
        "formula",
        "--layout",
        "strands",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("total: 4 4 1"), "{out}");
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(
        cli(&[
            "betti",
            "--input",
            &data("four_gens.ideal"),
            "--field",
            "GF(32004)"
        ])
        .0,
        EXIT_INPUT
    );
    assert_eq!(cli(&["frobnicate"]).0, EXIT_INPUT);
}
