use std::process::{Command, Output};

fn hpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hpi")).args(args).output().expect("hpi runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = hpi(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn check_sweedler() {
    let o = hpi(&["check", "catalog:sweedler-dual-numbers"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "action valid; Hopf relations hold\n");
}

#[test]
fn exponent_ut2() {
    let v = json(&["exponent", "catalog:ut2-trivial", "--n-max", "5"]);
    assert_eq!(v["d"], 2);
    assert_eq!(v["codim"], serde_json::json!([1, 2, 6, 18, 50]));
    let text = stdout(&hpi(&["exponent", "catalog:ut2-trivial", "--n-max", "5"]));
    assert!(text.contains("d = 2"));
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>()[..2] == ["5", "50"]));
}

#[test]
fn graded_cross_check() {
    let v = json(&["codim-graded", "catalog:m2-z2", "--n", "2"]);
    assert_eq!(v["graded"], v["dual"]);
    assert_eq!(v["equal"], true);
}

#[test]
fn radical_and_decompose() {
    let v = json(&["radical", "catalog:ut2-trivial"]);
    assert_eq!(v["jacobson"]["dim"], 1);
    assert_eq!(v["h_radical"]["dim"], 1);
    let v = json(&["decompose", "catalog:f2-swap"]);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 1);
    assert_eq!(v["d"], 2);
    assert_eq!(v["kappa_checks"], true);
}

#[test]
fn witness_search() {
    let v = json(&["witness", "catalog:sweedler-dual-numbers", "--k", "1", "--n0", "1"]);
    assert_eq!(v["found"], true);
    assert_eq!(v["degree"], 4);
}

#[test]
fn errors_are_json_with_distinct_codes() {
    let cap = hpi(&["codim", "catalog:ut2-trivial", "--n", "7", "--row-cap", "100"]);
    let schema = hpi(&["check", "catalog:missing"]);
    let pre = hpi(&["witness", "catalog:ut2-trivial"]);
    let mut codes = Vec::new();
    for o in [&cap, &schema, &pre] {
        let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(Some(e["error"]["exit"].as_i64().unwrap() as i32), o.status.code());
        codes.push(e["error"]["code"].as_str().unwrap().to_string());
    }
    assert_eq!(codes, ["resource_cap", "schema", "precondition"]);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema\": \"hpi-doc/1\"}").unwrap();
    assert_eq!(hpi(&["check", bad.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn file_input_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ut2.json");
    std::fs::write(&input, stdout(&hpi(&["catalog", "emit", "ut2-z2"]))).unwrap();
    let out = dir.path().join("report.json");
    let o = hpi(&["codim", input.to_str().unwrap(), "--n", "3", "--format", "json", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["codim"], 13);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let one = hpi(&["exponent", "catalog:m2-trivial", "--n-max", "4", "--format", "json", "--threads", "1"]);
    let four = hpi(&["exponent", "catalog:m2-trivial", "--n-max", "4", "--format", "json", "--threads", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn catalog_listing() {
    let names = stdout(&hpi(&["catalog", "list"]));
    assert!(names.lines().any(|l| l == "sweedler-dual-numbers"));
    for name in names.lines() {
        assert!(hpi(&["check", &format!("catalog:{name}")]).status.success(), "{name}");
    }
}
