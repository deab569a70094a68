//! The `abacus` binary driven as a subprocess.

use std::process::{Command, Output};

fn abacus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abacus")).args(args).env_remove("ABACUS_MAX_N").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = abacus(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn show_prints_the_abacus() {
    let o = abacus(&["show", "6,3,3,1", "--abacus"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "partition: 6,3,3,1\nsize: 13\nabacus:\n. O\n. .\nO O\n. .\n. O\n");
    let all = stdout(&abacus(&["show", "6,3,3,1"]));
    assert!(all.contains("sequence: .O..OO...O\n"));
    assert!(all.contains("conjugate: 4,3,3,1,1,1\n"));
}

#[test]
fn core_quotient_and_tree() {
    let v = json(&["--format", "json", "core-quotient", "6,3,3,1"]);
    assert_eq!(v["core"], serde_json::json!([2, 1]));
    assert_eq!(v["core_index"], 2);
    assert_eq!(v["mu"], serde_json::json!([2]));
    assert_eq!(v["nu"], serde_json::json!([2, 1]));
    assert_eq!(stdout(&abacus(&["tree", "6,3,3,1"])), "[2 -> [0 -> 0, 1], 2]\n");
    let tree = stdout(&abacus(&["--format", "json", "tree", "6,3,3,1"]));
    let back = abacus(&["tree", "--decode", tree.trim()]);
    assert_eq!(stdout(&back), "6,3,3,1\n");
}

#[test]
fn invalid_input_is_a_usage_error() {
    for args in [
        &["show", "1,3"][..],
        &["show", "2,x"],
        &["tree", "--decode", r#"{"label":0,"children":[{"label":0},{"label":0}]}"#],
        &["tree", "--decode", "{not json"],
        &["count", "z", "5"],
        &["count", "p"],
        &["verify", "gauss"],
        &["frobnicate"],
    ] {
        let o = abacus(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(abacus(&["--help"]).status.code(), Some(0));
}

#[test]
fn counts_in_every_format() {
    assert_eq!(stdout(&abacus(&["count", "p", "10"])), "42\n");
    assert_eq!(stdout(&abacus(&["count", "t", "5"])), "36\n");
    assert_eq!(stdout(&abacus(&["count", "q", "12"])), "15\n");
    let csv = stdout(&abacus(&["--format", "csv", "count", "s", "--table", "8"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,value"));
    assert_eq!(lines.count(), 9);
    let v = json(&["--format", "json", "count", "p", "10"]);
    assert_eq!(v["value"], "42");
    assert_eq!(v["pair_count_indices"], serde_json::json!([5, 2, 0]));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = abacus(&["verify", "gauss", "--order", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "OK: identical to x^100\n");
    let o = abacus(&["verify", "quotient", "--order", "60", "--perturb", "17"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("MISMATCH at x^17:"));
    let v = json(&["--format", "json", "verify", "tree-product", "--order", "32"]);
    assert!(v.to_string().contains("equal"));
}

#[test]
fn bounds_and_asymptotics() {
    let o = abacus(&["bounds", "--max-n", "300"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("HOLDS")));
    let csv = stdout(&abacus(&["--format", "csv", "asymptotics", "p", "--points", "100,500"]));
    assert!(csv.starts_with("n,exact,estimate,ratio\n100,190569292,"));
    json(&["--format", "json", "asymptotics", "qp", "--points", "100,200"]);
    json(&["--format", "json", "bounds", "--max-n", "50"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "bounds", "--max-n", "400"];
    assert_eq!(abacus(&args).stdout, abacus(&args).stdout);
    let args = ["asymptotics", "t", "--points", "100,1000"];
    assert_eq!(abacus(&args).stdout, abacus(&args).stdout);
}

#[test]
fn table_cap_comes_from_the_environment() {
    let capped = |cap: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_abacus")).args(args).env("ABACUS_MAX_N", cap).output().unwrap()
    };
    assert_eq!(capped("50", &["count", "p", "51"]).status.code(), Some(2));
    assert_eq!(capped("50", &["count", "p", "50"]).status.code(), Some(0));
    assert_eq!(abacus(&["count", "p", "5001"]).status.code(), Some(2));
    assert_eq!(capped("6000", &["count", "p", "5001"]).status.code(), Some(0));
}
