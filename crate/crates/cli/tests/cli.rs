use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn ccs(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ccs")).args(args).output().expect("spawn ccs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = ccs(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json_file(text: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    file
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["ccs2", "bt", "--rep", "a5", "--format", "json"]), "{\"value\":\"3/8\"}\n");
    assert_eq!(ok(&["ccs1", "bd:7", "--rep", "a3", "--generator", "b"]), "1/4\n");
    let spectrum: Value = serde_json::from_str(&ok(&["spectrum", "bi", "--format", "json"])).unwrap();
    assert_eq!(spectrum["group"], "bi");
    assert_eq!(spectrum["entries"].as_array().unwrap().len(), 8);
    assert_eq!(spectrum["entries"][0]["value"], "1/30");
}

#[test]
fn xi_values_are_exact_strings() {
    assert_eq!(ok(&["xi", "bt", "--rep", "a5", "--format", "json"]), "{\"value\":\"17/24\"}\n");
    let doc: Value = serde_json::from_str(&ok(&["xi", "bo", "--format", "json"])).unwrap();
    let a4 = doc["values"].as_array().unwrap().iter().find(|v| v["rep"] == "a4").unwrap();
    assert_eq!(a4["value"], "1/48");
    assert_eq!(a4["defect_sum"], "-47/48");
}

#[test]
fn spectrum_csv_has_one_row_per_value() {
    let csv = ok(&["spectrum", "bd:4", "--format", "csv"]);
    assert_eq!(csv, "value,multiplicity\n1/10,1\n3/10,1\n1/2,2\n7/10,1\n9/10,1\n");
}

#[test]
fn csv_rows_are_object_invariant_value() {
    let csv = ok(&["ccs2", "bt", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("object,invariant,value"));
    assert!(csv.lines().any(|l| l == "a7,ccs2,1/6"));
    assert!(lines.all(|l| l.split(',').count() == 3));
}

#[test]
fn first_ccs_table_layout() {
    let table = ok(&["ccs1", "bt"]);
    let rows: Vec<Vec<&str>> = table.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[0], ["a1", "a2", "a3", "a4", "a5", "a6", "a7"]);
    assert_eq!(rows[1], ["c", "0", "2/3", "1/3", "0", "1/3", "2/3", "0"]);
}

#[test]
fn cycles_from_types_groups_and_files() {
    let e6: Value = serde_json::from_str(&ok(&["cycle", "E_6", "--format", "json"])).unwrap();
    assert_eq!(e6["t"], "2");
    assert_eq!(e6["xi"], "1/12");
    assert_eq!(ok(&["cycle", "bo", "--format", "json"]), ok(&["cycle", "E_7", "--format", "json"]));

    let graph = json_file(
        r#"{"family":"A_2","nodes":[{"id":0,"self_intersection":-2},{"id":1,"self_intersection":-2}],"edges":[[0,1]]}"#,
    );
    let doc: Value =
        serde_json::from_str(&ok(&["cycle", "--graph", graph.path().to_str().unwrap(), "--format", "json"])).unwrap();
    assert_eq!(doc["coefficients"], serde_json::json!([1, 1]));
    assert_eq!(doc["t"], "1");
    assert_eq!(doc["xi"], Value::Null);
}

#[test]
fn topological_spectrum_with_mask_file() {
    let mask = json_file(r#"{"special":[true,false]}"#);
    let doc: Value =
        serde_json::from_str(&ok(&["topspec", "c:3", "--mask", mask.path().to_str().unwrap(), "--format", "json"]))
            .unwrap();
    assert_eq!(doc["first_classes"].as_array().unwrap().len(), 1);
    let all: Value = serde_json::from_str(&ok(&["topspec", "c:3", "--format", "json"])).unwrap();
    assert_eq!(all["first_classes"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_two() {
    let short = json_file(r#"{"special":[true]}"#);
    let missing = "/nonexistent/graph.json";
    let cases: Vec<Vec<&str>> = vec![
        vec!["ccs1", "bt", "--rep", "a9"],
        vec!["ccs1", "bt", "--rep", "a2", "--generator", "zeta"],
        vec!["ccs1", "bt", "--generator", "x"],
        vec!["ccs2", "c:1"],
        vec!["ccs2", "bd:10001"],
        vec!["group", "e8"],
        vec!["frobnicate", "bt"],
        vec!["spectrum", "bt", "--format", "xml"],
        vec!["cycle", "F_4"],
        vec!["cycle", "--graph", missing],
        vec!["cycle"],
        vec!["topspec", "c:3", "--mask", short.path().to_str().unwrap()],
        vec!["verify", "--max-l", "1"],
    ];
    for args in cases {
        let (code, out, err) = ccs(&args);
        assert_eq!(code, 2, "{args:?}: {out}{err}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn computation_errors_exit_one() {
    // Five -2 curves on a central -2 curve: not negative definite.
    let nodes: Vec<String> = (0..6).map(|i| format!(r#"{{"id":{i},"self_intersection":-2}}"#)).collect();
    let edges: Vec<String> = (1..6).map(|i| format!("[0,{i}]")).collect();
    let star =
        json_file(&format!(r#"{{"family":"star","nodes":[{}],"edges":[{}]}}"#, nodes.join(","), edges.join(",")));
    let (code, _, err) = ccs(&["cycle", "--graph", star.path().to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn machine_formats_contain_no_floats() {
    let float =
        |s: &str| s.as_bytes().windows(3).any(|w| w[0].is_ascii_digit() && w[1] == b'.' && w[2].is_ascii_digit());
    let commands: [&[&str]; 9] = [
        &["group", "bi"],
        &["reps", "bo"],
        &["ccs1", "bd:6"],
        &["ccs2", "bi"],
        &["xi", "bi"],
        &["cycle", "bd:9"],
        &["spectrum", "bd:9"],
        &["topspec", "bt"],
        &["verify", "--max-l", "3", "--max-r", "3"],
    ];
    for args in commands {
        for format in ["json", "csv"] {
            let args = [args, &["--format", format]].concat();
            let out = ok(&args);
            assert!(!float(&out), "{args:?}: {out}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in
        [&["reps", "bi", "--format", "json"][..], &["group", "bd:5"], &["verify", "--max-l", "4", "--max-r", "4"]]
    {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}

#[test]
fn small_verify_passes() {
    let report: Value =
        serde_json::from_str(&ok(&["verify", "--max-l", "4", "--max-r", "5", "--format", "json"])).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["mismatches"], 0);
    assert_eq!(report["tables"].as_array().unwrap().len(), 13);
    assert!(report["tables"].as_array().unwrap().iter().all(|t| t["checks"].as_u64().unwrap() > 0));
}

#[test]
fn help_exits_zero() {
    let out = ok(&["--help"]);
    for sub in ["group", "reps", "ccs1", "ccs2", "xi", "cycle", "spectrum", "topspec", "verify"] {
        assert!(out.contains(sub), "{sub}");
    }
}
