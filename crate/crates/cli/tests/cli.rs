use std::process::{Command, Output};

use serde_json::Value;

fn kpower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpower"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = kpower(args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_examples() {
    let r = json(&["analyze", "--group", "sym:3", "--k", "2", "--format", "json"]);
    assert_eq!(r["edges"], 4);
    assert_eq!(r["edge_count_formula"], 4);
    assert!(r["meta"]["generated_at_unix"].is_u64());

    let o = kpower(&["analyze", "--group", "cyclic:31", "--k", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "components: 7"));
    assert!(text.lines().any(|l| l == "is_perfect: false"));

    let r = json(&["analyze", "--group", "cyclic:1", "--k", "2", "--format", "json", "--no-meta"]);
    assert_eq!(r["order"], 1);
    assert_eq!(r["degree_sequence"], serde_json::json!([0]));
    assert!(r.get("meta").is_none());
}

#[test]
fn analyze_csv_has_header_and_one_row() {
    let o = kpower(&["analyze", "--group", "quaternion:2", "--k", "6", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("group,order,k,"));
    assert!(lines[1].contains("q8_k2_or6"));
}

#[test]
fn export_examples() {
    let o = kpower(&["export", "--group", "sym:3", "--k", "3", "--format", "dot"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches("[label=").count(), 6);
    assert_eq!(dot.matches(" -- ").count(), 2);

    let o = kpower(&["export", "--group", "cyclic:4", "--k", "2", "--format", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"group\":\"cyclic:4\",\"k\":2,\"edges\":[[0,2],[1,2],[2,3]],\"fixed_points\":[0]}\n"
    );

    let r = json(&["export", "--group", "cyclic:5", "--k", "6", "--format", "json"]);
    assert_eq!(r["edges"], serde_json::json!([]));
}

#[test]
fn export_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.dot");
    let o = kpower(&["export", "--group", "cyclic:4", "--k", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph \"P(cyclic:4, 2)\" {"));

    let bad = dir.path().join("missing").join("x.dot");
    let o = kpower(&["export", "--group", "cyclic:4", "--k", "2", "-o", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--family", "cyclic", "--max-n", "200", "--theorem", "edges"][..],
        &["verify", "--family", "quaternion", "--max-n", "32", "--theorem", "star"][..],
        &["verify", "--family", "cyclic", "--max-n", "100", "--theorem", "components"][..],
    ] {
        let o = kpower(args);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("RESULT PASS\n"));
    }
}

#[test]
fn verify_star_covers_q8_exponents() {
    let r = json(&[
        "verify", "--group", "quaternion:2", "--k", "2..=9", "--theorem", "star", "--format", "json", "--no-meta",
    ]);
    assert_eq!(r["passed"], true);
    assert_eq!(r["cells"], 8);
    assert_eq!(r["theorems"]["star"]["passed"], 8);
}

#[test]
fn verify_reports_counterexample_with_exit_one() {
    let o = kpower(&["verify", "--family", "cyclic", "--max-n", "6", "--theorem", "degrees", "--no-meta"]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("first counterexample: degrees: group cyclic:3 k=2"));
    assert!(text.ends_with("RESULT FAIL\n"));
}

#[test]
fn verify_all_theorems_on_small_families() {
    let o = kpower(&["verify", "--family", "dihedral", "--max-n", "12", "--theorem", "all", "--no-meta"]);
    // the degree formula is cyclic-only, so non-cyclic families pass every check
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = kpower(&["verify", "--family", "product", "--max-n", "4", "--factors", "3", "--no-meta"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn chair_examples() {
    for (n, k) in [("6", "5"), ("7", "2"), ("1", "2")] {
        let o = kpower(&["chair", "--n", n, "--no-meta"]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains(&format!("minimal_k: {k}\n")), "n={n}");
    }
    let r = json(&["chair", "--n", "6", "--format", "json", "--trace"]);
    assert_eq!(r["seating"], serde_json::json!([5, 4, 3, 2, 1, 0]));
    assert_eq!(r["rejected_whistles"], serde_json::json!([2, 3, 4]));
    assert_eq!(r["trace"].as_array().unwrap().last().unwrap(), "RESULT k=5");
}

#[test]
fn output_is_deterministic_without_meta() {
    for args in [
        &["analyze", "--group", "dihedral:6", "--k", "5", "--format", "json", "--no-meta"][..],
        &["analyze", "--group", "product:2x6", "--k", "3", "--no-meta"][..],
        &["verify", "--family", "sym", "--max-n", "4", "--format", "json", "--no-meta"][..],
        &["sweep", "--family", "quaternion", "--max-n", "6", "--param", "components"][..],
    ] {
        let a = kpower(args);
        let b = kpower(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!stdout(&a).contains("meta"));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["analyze", "--group", "bogus:3", "--k", "2"][..],
        &["analyze", "--group", "cyclic:70000", "--k", "2"][..],
        &["analyze", "--group", "sym:9", "--k", "2"][..],
        &["analyze", "--group", "quaternion:1", "--k", "2"][..],
        &["analyze", "--k", "2"][..],
        &["analyze", "--group", "cyclic:4", "--k", "1"][..],
        &["analyze", "--group", "cyclic:4", "--k", "2", "--format", "xml"][..],
        &["verify", "--family", "cyclic", "--max-n", "5", "--theorem", "nope"][..],
        &["verify", "--family", "cyclic", "--min-n", "9", "--max-n", "5"][..],
        &["verify", "--family", "cyclic", "--max-n", "5", "--k", "4..2"][..],
        &["chair", "--n", "0"][..],
        &["sweep", "--family", "cyclic", "--max-n", "5", "--param", "girth"][..],
        &["frobnicate"][..],
    ] {
        let o = kpower(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn config_supplies_flags_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("kpower.toml");
    std::fs::write(
        &cfg,
        "no-meta = true\nformat = \"json\"\n[analyze]\ngroup = \"sym:3\"\nk = 2\n[verify]\nfamily = \"cyclic\"\nmax-n = 12\ntheorem = [\"edges\", \"forest\"]\n",
    )
    .unwrap();
    let c = cfg.to_str().unwrap();

    let r = json(&["--config", c, "analyze"]);
    assert_eq!(r["edges"], 4);
    assert!(r.get("meta").is_none());
    let r = json(&["--config", c, "analyze", "--k", "3"]);
    assert_eq!(r["edges"], 2);

    let r = json(&["--config", c, "verify"]);
    assert_eq!(r["groups"], 12);
    let names: Vec<&String> = r["theorems"].as_object().unwrap().keys().collect();
    assert_eq!(names, ["edges", "forest"]);
    let r = json(&["--config", c, "verify", "--max-n", "3", "--theorem", "empty"]);
    assert_eq!(r["groups"], 3);
    assert!(r["theorems"].get("empty").is_some());

    let o = kpower(&["--config", dir.path().join("absent.toml").to_str().unwrap(), "analyze"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sweep_matrix() {
    let o = kpower(&["sweep", "--family", "cyclic", "--max-n", "4", "--param", "edges"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "group,k=2,k=3,k=4,k=5\ncyclic:1,0,,,\ncyclic:2,1,0,,\ncyclic:3,1,2,0,\ncyclic:4,3,1,3,0\n"
    );
    let o = kpower(&["sweep", "--group", "sym:3", "--k", "2..6", "--param", "star"]);
    assert_eq!(stdout(&o), "group,k=2,k=3,k=4,k=5,k=6\nsym:3,false,false,false,false,true\n");
}
