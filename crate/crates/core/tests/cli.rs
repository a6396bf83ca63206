use std::process::{Command, Output};

use serde_json::Value;

fn groupcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn sigma_reports_certificate_and_classifier() {
    let out = groupcover(&["sigma", "A4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["sigma"], 5);
    assert_eq!(doc["classifier"], "five");
    assert_eq!(doc["agreement"], true);
    assert_eq!(doc["certificate"].as_array().unwrap().len(), 5);

    let cyclic = json(&groupcover(&["sigma", "C12"]));
    assert_eq!(cyclic["sigma"], "uncoverable");
}

#[test]
fn mu_reports_exact_ratio() {
    let doc = json(&groupcover(&["mu", "S3", "--k", "3"]));
    assert_eq!(doc["mu"], 5);
    assert_eq!(doc["ratio"], "5/6");
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(groupcover(&["sigma", "Z9"]).status.code(), Some(1));
    assert_eq!(groupcover(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(groupcover(&["mu", "S3"]).status.code(), Some(1));
    assert_eq!(
        groupcover(&["conjecture", "--k", "1", "--max-order", "10"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(groupcover(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_suites_exit_zero_when_all_rows_hold() {
    for suite in ["c2", "c3", "c3odd"] {
        let out = groupcover(&["verify", "--suite", suite, "--max-order", "30"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let doc = json(&out);
        assert_eq!(doc["holds"], true);
        assert_eq!(doc["violations"], 0);
    }
}

#[test]
fn scan_is_deterministic_and_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "3")] {
        let out = groupcover(&[
            "scan",
            "--k",
            "4",
            "--max-order",
            "30",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    let doc: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(doc["max_ratio"], "5/6");
    assert_eq!(doc["max_group"], "A4");
    let names: Vec<&str> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["group"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn csv_output_has_header_and_rows() {
    let out = groupcover(&["--format", "csv", "verify", "--suite", "c2", "--max-order", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        groupcover::report::CSV_HEADER
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert!(rows.iter().any(|r| &r[0] == "C2xC2" && &r[5] == "3/4"));
}

#[test]
fn cache_reuses_rows_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let args = [
        "--cache",
        cache.to_str().unwrap(),
        "scan",
        "--k",
        "3",
        "--max-order",
        "12",
    ];
    let first = groupcover(&args);
    let lines = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert!(lines > 0);
    let second = groupcover(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), lines);

    std::fs::write(&cache, "{garbage\n").unwrap();
    let third = groupcover(&args);
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt cache line"));
}

#[test]
fn group_files_are_accepted_as_specs_and_catalog_members() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("klein.json");
    std::fs::write(
        &file,
        r#"{"name":"klein","kind":"perm","degree":4,"generators":[[1,0,3,2],[2,3,0,1]]}"#,
    )
    .unwrap();
    let doc = json(&groupcover(&["sigma", file.to_str().unwrap()]));
    assert_eq!(doc["sigma"], 3);
    let by_name = json(&groupcover(&[
        "--groups-dir",
        dir.path().to_str().unwrap(),
        "mu",
        "klein",
        "--k",
        "2",
    ]));
    assert_eq!(by_name["ratio"], "3/4");

    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"name":"bad","kind":"cayley","table":[[0,1],[1,1]]}"#,
    )
    .unwrap();
    let out = groupcover(&[
        "--groups-dir",
        dir.path().to_str().unwrap(),
        "scan",
        "--k",
        "2",
        "--max-order",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("latin-square"));
}

#[test]
fn probe_star_is_reproducible_for_a_seed() {
    let run = |seed: &str| groupcover(&["probe-star", "--samples", "50", "--seed", seed, "--max-order", "12"]).stdout;
    assert_eq!(run("7"), run("7"));
}
