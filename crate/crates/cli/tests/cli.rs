//! End-to-end checks of the command-line surface: grammar, output formats
//! and the exit-code policy (0 ok, 1 strict discrepancy, 2 usage/input).

use std::path::PathBuf;
use std::process::{Command, Output};

use treenorm::constructions::t_hat;

fn treenorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treenorm"))
        .args(args)
        .output()
        .expect("spawn binary")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp_file(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("treenorm-cli-{}-{name}", std::process::id()))
}

#[test]
fn compute_emits_profile_json() {
    let input = tmp_file("fig2.el");
    std::fs::write(&input, "5\n0 1\n1 2\n2 3\n2 4\n").unwrap();
    let out = treenorm(&["compute", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["profile"]["norm_sum"], 2);
    assert_eq!(doc["profile"]["periphery"], serde_json::json!([0, 3, 4]));
    assert_eq!(doc["profile"]["ecc"], serde_json::json!([3, 2, 2, 3, 3]));
    std::fs::remove_file(&input).ok();
}

#[test]
fn compute_missing_file_is_input_error() {
    let out = treenorm(&["compute", "--input", "/nonexistent/x.el"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_malformed_input_is_input_error() {
    let input = tmp_file("bad.el");
    std::fs::write(&input, "3\n0 9\n").unwrap();
    let out = treenorm(&["compute", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&input).ok();
}

#[test]
fn construct_t_hat_matches_library() {
    let out = treenorm(&["construct", "--family", "t_hat", "--n", "10", "--d", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), t_hat(10, 6).unwrap().to_edge_list());
}

#[test]
fn construct_fixture_and_bad_family() {
    let out = treenorm(&["construct", "--family", "fixture", "--id", "fig2_tree"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "5\n0 1\n1 2\n2 3\n2 4\n");

    let out = treenorm(&["construct", "--family", "nope", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    // out-of-range parameters are input errors
    let out = treenorm(&["construct", "--family", "t_hat", "--n", "5", "--d", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_count_and_blocks() {
    let out = treenorm(&["enumerate", "--n", "7", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out).trim(), "11");

    let out = treenorm(&["enumerate", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    for block in blocks {
        let g = treenorm::graph::Graph::parse_edge_list(block).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.order(), 4);
    }

    let out = treenorm(&["enumerate", "--n", "9", "--diameter", "8", "--count-only"]);
    assert_eq!(stdout_str(&out).trim(), "1");

    let out = treenorm(&["enumerate", "--n", "99", "--count-only"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn formula_json_shape() {
    let out = treenorm(&["formula", "--name", "norm-t-hat", "--n", "10", "--d", "6"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["formula"], "norm-t-hat");
    assert_eq!(doc["inputs"]["n"], 10);
    assert_eq!(doc["inputs"]["d"], 6);
    assert_eq!(doc["branch"], "even_comet");
    assert_eq!(doc["applies"], true);
    assert_eq!(doc["value"], 23);

    let out = treenorm(&["formula", "--name", "norm-t-hat", "--n", "9", "--d", "7"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["applies"], false);
    assert_eq!(doc["value"], serde_json::Value::Null);

    let out = treenorm(&["formula", "--name", "optimal-diameters", "--n", "8"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["value"], serde_json::json!([4, 6]));

    let out = treenorm(&["formula", "--name", "no-such", "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));

    // missing required sub-parameter
    let out = treenorm(&["formula", "--name", "norm-t-hat", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_writes_report_and_file() {
    let path = tmp_file("scan.json");
    let out = treenorm(&[
        "scan",
        "--n",
        "10",
        "--objective",
        "norm",
        "--direction",
        "max",
        "--diameter",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["report"]["optimum"], 23);
    assert_eq!(doc["report"]["vacuous"], false);
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file["report"]["optimum"], 23);
    std::fs::remove_file(&path).ok();

    let out = treenorm(&["scan", "--n", "6", "--objective", "silly", "--direction", "max"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_follow_discrepancies() {
    // clean theorem: exit 0 with and without --strict
    let out = treenorm(&["verify", "--theorem", "thm-lambda-min", "--n", "8..9", "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["discrepancies"], 0);

    // the stated global lambda maximum disagrees with exhaustive search:
    // data without --strict, exit 1 with it
    let out = treenorm(&["verify", "--theorem", "thm-lambda-max-global", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["discrepancies"], 1);

    let out = treenorm(&[
        "verify",
        "--theorem",
        "thm-lambda-max-global",
        "--n",
        "9",
        "--strict",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // unknown theorem id and malformed range are usage errors
    let out = treenorm(&["verify", "--theorem", "thm-nope", "--n", "5..6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = treenorm(&["verify", "--theorem", "thm-lambda-min", "--n", "9..8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_order_range_form() {
    let out = treenorm(&["verify", "--theorem", "prop-norm-star", "--n", "6"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["n_lo"], 6);
    assert_eq!(doc["n_hi"], 6);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 1);
    assert_eq!(doc["reports"][0]["kind"], "extremal");
}

#[test]
fn anomaly_output() {
    let out = treenorm(&["anomaly", "--n", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["count"], 0);

    let out = treenorm(&["anomaly", "--n", "5"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert!(doc["count"].as_u64().unwrap() > 0);
    let rec = &doc["records"][0];
    assert!(rec["norm_after"].as_i64().unwrap() > rec["norm_before"].as_i64().unwrap());
}

#[test]
fn usage_error_exit_code() {
    let out = treenorm(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
    let out = treenorm(&[]);
    assert_eq!(out.status.code(), Some(2));
}
