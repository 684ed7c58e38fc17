use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_excited"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn eyd_counts_seven_diagrams() {
    let doc = json(&[
        "eyd", "--type", "A", "--n", "9", "--d", "4", "--lambda", "3,1", "--mu", "5,4,3",
    ]);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["count"], 7);
    assert_eq!(doc["states"].as_array().unwrap().len(), 7);
    assert_eq!(doc["v"], serde_json::json!([1, 5, 7, 9, 2, 3, 4, 6, 8]));
}

#[test]
fn ascii_blocks_are_distinct() {
    let o = run(&[
        "eyd", "--type", "A", "--n", "9", "--d", "4", "--lambda", "3,1", "--mu", "5,4,3", "--format", "ascii",
    ]);
    let text = stdout(&o);
    let blocks: std::collections::BTreeSet<&str> = text.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 7);
    assert!(blocks.contains("###..\n#...\n..."));
    let o = run(&[
        "eyd", "--type", "C", "--n", "2", "--lambda", "1", "--mu", "2,1", "--format", "ascii",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("#."));
}

#[test]
fn localize_all_methods_agree() {
    let o = run(&[
        "localize",
        "--type",
        "C",
        "--n",
        "4",
        "--lambda",
        "2",
        "--v",
        "-4,-3,-2,-1",
        "--method",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    assert_eq!(
        first,
        "2*e1^2 + 4*e1*e2 + 4*e1*e3 + 2*e1*e4 + 2*e2^2 + 4*e2*e3 + 2*e2*e4 + 2*e3^2 + 2*e3*e4"
    );
    assert!(text.contains("agree"));
    let doc = json(&[
        "localize", "--type", "C", "--n", "4", "--lambda", "2", "--mu", "4,3,2,1", "--method", "all",
    ]);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["values"]["eyd"]["terms"][0]["coefficient"], "2");
}

#[test]
fn verify_crosscheck_d4() {
    let o = run(&["verify", "--suite", "crosscheck", "--type", "D", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_suites_pass() {
    for suite in ["chevalley", "giambelli", "multiplicity", "oracle", "paths", "pieri"] {
        let doc = json(&["verify", "--suite", suite, "--type", "D", "--n", "4"]);
        assert_eq!(doc["passed"], true, "{suite}");
    }
    let doc = json(&["verify", "--suite", "oracle", "--type", "A", "--n", "5", "--d", "2"]);
    assert_eq!(doc["passed"], true);
}

#[test]
fn multiplicity_examples() {
    let doc = json(&[
        "mult",
        "--type",
        "C",
        "--n",
        "4",
        "--w",
        "1,3,-4,-2",
        "--v",
        "-4,-3,-2,-1",
    ]);
    assert_eq!(doc["count"], 10);
    let doc = json(&["mult", "--type", "B", "--n", "4", "--lambda", "3,1", "--mu", "4,3,2,1"]);
    assert_eq!(doc["count"], 5);
    assert_eq!(doc["via_hv"], Value::Null);
}

#[test]
fn giambelli_and_paths() {
    let doc = json(&[
        "giambelli",
        "--type",
        "C",
        "--n",
        "3",
        "--lambda",
        "3,2,1",
        "--mu",
        "3,2,1",
    ]);
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 6);
    let doc = json(&[
        "paths",
        "--type",
        "C",
        "--n",
        "4",
        "--lambda",
        "3,1",
        "--mu",
        "4,3,2,1",
        "--pfaffian",
    ]);
    assert_eq!(doc["count"], 10);
    assert_eq!(doc["pfaffian_holds"], true);
    let doc = json(&[
        "paths", "--type", "C", "--n", "4", "--lambda", "3,1", "--mu", "4,3,2,1", "--kind", "II",
    ]);
    assert_eq!(doc["count"], 5);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["localize", "--type", "A", "--n", "4", "--lambda", "1", "--mu", "2"],
        &[
            "localize", "--type", "A", "--n", "4", "--d", "2", "--lambda", "3", "--mu", "2,2",
        ],
        &[
            "localize", "--type", "A", "--n", "4", "--d", "2", "--lambda", "1", "--w", "1324", "--mu", "2",
        ],
        &["mult", "--type", "C", "--n", "3", "--lambda", "3", "--mu", "2"],
        &[
            "giambelli",
            "--type",
            "A",
            "--n",
            "4",
            "--d",
            "2",
            "--lambda",
            "1",
            "--mu",
            "2",
        ],
        &["eyd", "--type", "C", "--n", "3", "--lambda", "2,2", "--mu", "3,2"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic_and_out_file_works() {
    let args = [
        "localize", "--type", "D", "--n", "5", "--lambda", "2", "--mu", "4,3,2,1", "--method", "all", "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let c = run(&with_out);
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
}

#[test]
fn cache_hits_match_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let base = [
        "localize",
        "--type",
        "B",
        "--n",
        "3",
        "--lambda",
        "3,1",
        "--mu",
        "3,2,1",
        "--method",
        "factorial",
        "--format",
        "json",
    ];
    let fresh = run(&base);
    let mut cached = base.to_vec();
    cached.extend(["--cache", cache]);
    let first = run(&cached);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run(&cached);
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);

    // A whole suite through a warm cache still passes.
    let suite = [
        "verify",
        "--suite",
        "crosscheck",
        "--type",
        "B",
        "--n",
        "3",
        "--cache",
        cache,
    ];
    assert_eq!(run(&suite).status.code(), Some(0));
    assert_eq!(run(&suite).status.code(), Some(0));
}

#[test]
fn disagreement_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = [
        "localize", "--type", "C", "--n", "3", "--lambda", "2", "--mu", "3,2,1", "--method", "all", "--cache", cache,
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&entry).unwrap()).unwrap();
    doc["polynomial"] = "x1".into();
    std::fs::write(&entry, doc.to_string()).unwrap();
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("disagree"));
}
