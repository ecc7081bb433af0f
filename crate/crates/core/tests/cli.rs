use dyck_garnir::cli::{run, Outcome};
use dyck_garnir::dyck::{Tiling, TilingJson};
use dyck_garnir::garnir::RelationJson;
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("dyck-garnir").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn weight_of_the_worked_example() {
    let out = cli(&["fp", "--lambda", "(5,3,3,1)"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "120\n"));
    let v = json(&["fp", "--lambda", "(5,3,3,1)", "--hook", "--json"]);
    assert_eq!(v["f"], 120);
    assert_eq!(v["hook"], 120);
}

#[test]
fn product_of_the_single_box() {
    let v = json(&[
        "matrix", "--f", "1", "--g", "1", "--which", "product", "--json",
    ]);
    assert_eq!(v["rows"].to_string(), "[[1,0],[0,1]]");
    let out = cli(&["matrix", "--f", "1", "--g", "1", "--which", "N"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("-1"));
    let q = json(&[
        "matrix", "--f", "2", "--g", "2", "--which", "product", "--q", "--json",
    ]);
    assert_eq!(q["rows"][0][0].to_string(), "[1]");
    assert_eq!(q["rows"][1][0].to_string(), "[]");
    let csv = cli(&["matrix", "--f", "1", "--g", "2", "--which", "p", "--csv"]);
    assert_eq!(csv.stdout.lines().next().unwrap(), r#",(),(1),"(1,1)""#);
}

#[test]
fn garnir_relation_for_two_rows() {
    let out = cli(&[
        "garnir", "--pi", "(8,4)", "--node", "1,4", "--e", "2", "--json",
    ]);
    assert_eq!(out.code, 0);
    let rel: RelationJson = serde_json::from_str(&out.stdout).unwrap();
    let coeffs: Vec<u32> = rel
        .terms
        .iter()
        .map(|t| u32::try_from(&t.coeff).unwrap())
        .collect();
    assert_eq!(coeffs, vec![1, 2, 3, 3, 6, 6]);
    assert_eq!(rel.node, [1, 4]);
    assert_eq!(serde_json::to_string(&rel).unwrap(), out.stdout.trim_end());

    let classical = json(&[
        "garnir",
        "--pi",
        "(11,5,3,1)",
        "--node",
        "1,5",
        "--e",
        "3",
        "--classical",
        "--json",
    ]);
    let terms = classical["terms"].as_array().unwrap();
    let summary: Vec<String> = terms
        .iter()
        .map(|t| format!("{}:{}", t["sigma"], t["coeff"]))
        .collect();
    assert_eq!(summary, vec!["[1,2]:1", "[1]:1", "[2]:2", "[]:3"]);

    let text = cli(&[
        "garnir", "--pi", "(8,4)", "--node", "1,4", "--e", "2", "--kappa", "-1",
    ]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.starts_with("1 · λ = ()"));
}

#[test]
fn tilings_count_and_list() {
    let out = cli(&[
        "tilings",
        "count",
        "--outer",
        "(6,6,4,3,1,1)",
        "--inner",
        "(4,1,1)",
        "--filter",
        "ce",
    ]);
    assert_eq!(out.stdout, "1\n");
    let ci = cli(&[
        "tilings", "count", "--outer", "(3,3,3)", "--inner", "()", "--filter", "ci",
    ]);
    let listed = json(&[
        "tilings", "list", "--outer", "(3,3,3)", "--inner", "()", "--filter", "ci", "--json",
    ]);
    let list = listed.as_array().unwrap();
    assert_eq!(ci.stdout.trim().parse::<usize>().unwrap(), list.len());
    for item in list {
        let t: TilingJson = serde_json::from_value(item.clone()).unwrap();
        let tiling = Tiling::from_json(&t).unwrap();
        assert_eq!(tiling.to_json(), t);
    }
    let q = json(&[
        "tilings", "count", "--outer", "(2,2)", "--inner", "()", "--q", "--json",
    ]);
    assert_eq!(q["filter"], "all");
    assert!(q["qpoly"].is_array());
    let text = cli(&["tilings", "list", "--outer", "(2,1)", "--inner", "()"]);
    assert!(text.stdout.ends_with(" tilings\n"));
}

#[test]
fn paren_output() {
    let v = json(&["paren", "--lambda", "(5,3,3,1)", "--json"]);
    assert_eq!(v["window"], ")())(())(");
    assert_eq!(v["padded"], "(()())(())()");
    let out = cli(&["paren", "--lambda", "(5,3,3,1)", "--pairs"]);
    assert!(out.stdout.contains("balanced (()())(())()"));
}

#[test]
fn module_and_suite() {
    let v = json(&["module", "verify", "--f", "2", "--g", "2", "--json"]);
    assert_eq!(v["s_in_t"]["passed"], true);
    assert_eq!(v["sum_coefficients"][5]["coeff"], 6);
    let a = cli(&["verify", "all", "--max-box", "2"]);
    let b = cli(&["verify", "all", "--max-box", "2"]);
    assert_eq!(a.code, 0);
    assert_eq!(a, b);
    assert!(a.stdout.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["matrix", "--f", "1", "--g", "1", "--which", "bogus"][..],
        &["fp", "--lambda", "(1,2)"],
        &["garnir", "--pi", "(3,1)", "--node", "1,3", "--e", "2"],
        &["garnir", "--pi", "(3,3)", "--node", "0,1", "--e", "2"],
        &["garnir", "--pi", "(3,3)", "--node", "1,1", "--e", "1"],
        &["tilings", "count", "--outer", "(1)", "--inner", "(2)"],
        &["module", "verify", "--f", "5", "--g", "4"],
        &["verify", "all", "--max-box", "9"],
        &["nonsense"],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("garnir"));
}
