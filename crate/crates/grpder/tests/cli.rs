use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn grpder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpder"))
        .args(args)
        .env_remove("GRPDER_MAX_N")
        .output()
        .expect("spawn grpder")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn dims_table() {
    let out = grpder(&[
        "dims",
        "--n-list",
        "1,2,3",
        "--char-list",
        "0,3,7",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = |n: u64, c: u64| {
        rows.as_array()
            .unwrap()
            .iter()
            .find(|r| r["n"] == n && r["char"] == c)
            .unwrap()
            .clone()
    };
    let r = row(1, 0);
    assert_eq!(
        (r["dim_der_oracle"].as_u64(), r["dim_inner"].as_u64()),
        (Some(3), Some(3))
    );
    let r = row(3, 3);
    assert_eq!(r["dim_der_oracle"], 20);
    assert_eq!(r["dim_inner"], 15);
    assert_eq!(r["dim_outer_complement"], 5);
    assert_eq!(r["match"], true);
    let r = row(2, 7);
    assert_eq!(
        (
            r["dim_der_oracle"].as_u64(),
            r["dim_outer_complement"].as_u64()
        ),
        (Some(6), Some(0))
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        code(&grpder(&["dims", "--n-list", "1", "--char-list", "2"])),
        2
    );
    assert_eq!(
        code(&grpder(&["dims", "--n-list", "1", "--char-list", "9"])),
        2
    );
    assert_eq!(
        code(&grpder(&["verify", "--n-max", "2", "--chars", "2"])),
        2
    );
    assert_eq!(code(&grpder(&["bogus"])), 2);
    assert_eq!(
        code(&grpder(&[
            "basis", "--n", "1", "--char", "0", "--which", "nope"
        ])),
        2
    );
    assert_eq!(
        code(&grpder(&[
            "basis",
            "--n",
            "1",
            "--char",
            "0",
            "--which",
            "anti_centralizer:a"
        ])),
        2
    );
    assert_eq!(
        code(&grpder(&[
            "classify",
            "--n",
            "1",
            "--char",
            "0",
            "--in",
            "/nonexistent/d.json"
        ])),
        2
    );
}

#[test]
fn max_n_is_capped_by_environment() {
    let capped = Command::new(env!("CARGO_BIN_EXE_grpder"))
        .args(["dims", "--n-list", "3", "--char-list", "0"])
        .env("GRPDER_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 2);
    assert_eq!(
        code(&grpder(&["dims", "--n-list", "13", "--char-list", "0"])),
        2
    );
}

#[test]
fn verify_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for path in [&first, &second] {
        let out = grpder(&[
            "verify",
            "--n-max",
            "4",
            "--chars",
            "0,3,5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap());

    let report = read_json(&first);
    assert_eq!(report["pass"], true);
    let cases = report["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 12);
    assert_eq!(
        (cases[0]["n"].as_u64(), cases[0]["char"].as_u64()),
        (Some(1), Some(0))
    );
    assert_eq!(cases[0]["lemma26_ok"], true);
    assert_eq!(cases[0]["class_count"], 5);
}

#[test]
fn basis_exports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let p = path.to_str().unwrap();
    let count = |which: &str, n: &str, c: &str| {
        let out = grpder(&["basis", "--n", n, "--char", c, "--which", which, "--out", p]);
        assert_eq!(code(&out), 0);
        read_json(&path).as_array().unwrap().len()
    };
    assert_eq!(count("inner", "1", "0"), 3);
    assert_eq!(count("anti_centralizer:b", "1", "0"), 2);
    assert_eq!(count("full", "3", "3"), 20);
    assert!(count("anti_centralizer:a_inv_b", "2", "5") > 0);
}

fn write_pair(dir: &Path, name: &str, pair: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, pair.to_string()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn classify_trichotomy() {
    let dir = tempfile::tempdir().unwrap();
    let empty = serde_json::json!({"n": 1, "char": 0, "terms": []});
    let one = serde_json::json!({"n": 1, "char": 0, "terms": [{"i": 0, "j": 0, "c": "1"}]});

    let zero = write_pair(
        dir.path(),
        "zero.json",
        &serde_json::json!({"da": empty, "db": empty}),
    );
    let out = grpder(&["classify", "--n", "1", "--char", "0", "--in", &zero]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("Inner\nwitness: "));

    let bad = write_pair(
        dir.path(),
        "bad.json",
        &serde_json::json!({"da": one, "db": empty}),
    );
    let out = grpder(&["classify", "--n", "1", "--char", "0", "--in", &bad]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "NotADerivation\n"));

    // Case flags must agree with the payload.
    let out = grpder(&["classify", "--n", "2", "--char", "0", "--in", &zero]);
    assert_eq!(code(&out), 2);

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{not json").unwrap();
    let out = grpder(&[
        "classify",
        "--n",
        "1",
        "--char",
        "0",
        "--in",
        garbage.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn modular_case_has_outer_and_inner_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("full.json");
    let out = grpder(&[
        "basis",
        "--n",
        "3",
        "--char",
        "3",
        "--which",
        "full",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let mut seen = Vec::new();
    for (k, pair) in read_json(&path).as_array().unwrap().iter().enumerate() {
        let input = write_pair(dir.path(), &format!("d{k}.json"), pair);
        let out = grpder(&["classify", "--n", "3", "--char", "3", "--in", &input]);
        assert_eq!(code(&out), 0);
        seen.push(stdout(&out).lines().next().unwrap().to_owned());
    }
    assert!(seen.iter().any(|s| s == "Outer"));
    assert!(seen.iter().all(|s| s == "Outer" || s == "Inner"));

    let inner_path = dir.path().join("inner.json");
    grpder(&[
        "basis",
        "--n",
        "3",
        "--char",
        "3",
        "--which",
        "inner",
        "--out",
        inner_path.to_str().unwrap(),
    ]);
    let first = &read_json(&inner_path)[0];
    let input = write_pair(dir.path(), "inner0.json", first);
    let out = grpder(&["classify", "--n", "3", "--char", "3", "--in", &input]);
    assert!(stdout(&out).starts_with("Inner\n"));
}
