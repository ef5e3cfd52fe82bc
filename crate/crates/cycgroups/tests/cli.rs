use std::process::{Command, Output};

use cycgroups::expr::recipe_expression;
use cycgroups_core::classify::theorem_claims;

fn cycgroups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycgroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_q8() {
    let out = cycgroups(&["analyze", "Q8", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&str> = json
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys, ["cyclic_count", "delta", "n_d", "order", "sigma"]);
    assert_eq!(json["delta"], 3);
    assert_eq!(json["sigma"], serde_json::json!([4, 4, 4]));
    assert_eq!(json["order"], 8);
    assert_eq!(json["cyclic_count"], 5);
}

#[test]
fn theorem_expressions_round_trip() {
    for claim in theorem_claims() {
        for g in &claim.groups {
            let expr = recipe_expression(&g.recipe).unwrap();
            let out = cycgroups(&["analyze", &expr, "--format", "json"]);
            assert!(out.status.success(), "{expr}");
            let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
            assert_eq!(json["delta"], claim.delta, "{expr}");
            assert_eq!(
                json["sigma"],
                serde_json::to_value(&g.signature).unwrap(),
                "{expr}"
            );
        }
    }
}

#[test]
fn exclude_counts() {
    let out = cycgroups(&["exclude", "--delta", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with("delta 5: 49 candidates, 47 excluded, 2 survivors\n"),
        "{text}"
    );
    assert!(text.contains("exclusion table for delta 5: 47"));
    assert!(text.contains("revised table for delta 5: 2"));
    assert!(text.contains("C3 : C4"));
    let json: serde_json::Value =
        serde_json::from_slice(&cycgroups(&["exclude", "--delta", "4", "--format", "json"]).stdout)
            .unwrap();
    assert_eq!(json["candidates"].as_array().unwrap().len(), 27);
    assert_eq!(json["exclusions"].as_array().unwrap().len(), 23);
    assert_eq!(json["revised"].as_array().unwrap().len(), 4);
}

#[test]
fn latex_captions() {
    let text = stdout(&cycgroups(&[
        "candidates",
        "--delta",
        "4",
        "--format",
        "latex",
    ]));
    assert!(text.contains("\\caption{Table for $\\Delta(G)=4$}"));
    assert!(text.contains("1+1+1+1 & & none"));
    let text = stdout(&cycgroups(&[
        "exclude", "--delta", "1", "--format", "latex",
    ]));
    assert!(text.contains("\\caption{Exclusion table for $\\Delta(G)=1$}"));
    assert!(text.contains("(6) & No $C_{3}$"));
    assert!(text.contains("\\caption{Revised table for $\\Delta(G)=1$}"));
    assert!(text.contains("(3) & $C_{3}$, $D_{6}$"));
}

#[test]
fn verify_all_passes() {
    let out = cycgroups(&["verify", "--all", "--format", "json"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&str> = json
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys, ["claims", "pass", "properties", "sweep"]);
    assert_eq!(json["pass"], true);
    assert_eq!(json["claims"].as_array().unwrap().len(), 25);
}

#[test]
fn verify_one_theorem() {
    let text = stdout(&cycgroups(&["verify", "--delta", "5"]));
    let matched: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS sweep "))
        .collect();
    assert_eq!(matched.len(), 3, "{text}");
    for name in ["-> C7", "-> D14", "-> C3 : C4"] {
        assert!(matched.iter().any(|l| l.ends_with(name)), "{name}");
    }
    assert!(text.ends_with("overall: PASS\n"));
}

#[test]
fn catalog_filters() {
    let text = stdout(&cycgroups(&[
        "catalog",
        "--max-order",
        "24",
        "--delta",
        "2",
    ]));
    let labels: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(labels, ["C6", "C4xC2", "D12", "D8xC2"]);
    let text = stdout(&cycgroups(&[
        "catalog",
        "--max-order",
        "16",
        "--sigma",
        "4,4,4,4",
    ]));
    assert_eq!(text.lines().count(), 4);
    assert_eq!(
        cycgroups(&["catalog", "--max-order", "25"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cycgroups(&["catalog", "--max-order", "8", "--sigma", "2,3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    for args in [
        &["nonsense"][..],
        &["analyze"],
        &["explore"],
        &["verify", "--delta"],
        &["analyze", "D7"],
        &["explore", "--delta", "17"],
    ] {
        assert_eq!(cycgroups(args).status.code(), Some(2), "{args:?}");
    }
    let out = cycgroups(&["analyze", "C4 x C100"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 5"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["exclude", "--delta", "5", "--format", "latex"][..],
        &["explore", "--delta", "6", "--format", "json"],
        &["verify", "--all"],
    ] {
        assert_eq!(cycgroups(args).stdout, cycgroups(args).stdout, "{args:?}");
    }
}
