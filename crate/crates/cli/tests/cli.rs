use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn polycert(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycert"))
        .current_dir(dir)
        .env("NO_COLOR", "1")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = polycert(dir, args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn sphere_boundary_is_certified() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &["generate", "sphere_boundary:3", "-o", "s3.fl"],
    );
    let out = ok(
        dir.path(),
        &["obstruct", "s3.fl", "--curves", "3", "--expect-certificate"],
    );
    assert!(out.contains("verdict: NotEmbeddable"));
}

#[test]
fn suspended_torus_pipeline_is_certified() {
    let dir = TempDir::new().unwrap();
    ok(dir.path(), &["generate", "torus7", "-o", "t.fl"]);
    ok(dir.path(), &["suspend", "t.fl", "-o", "st.fl"]);
    let out = ok(
        dir.path(),
        &[
            "obstruct",
            "st.fl",
            "--curves",
            "3",
            "--json",
            "--expect-certificate",
        ],
    );
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["obstruction"]["verdict"], "NotEmbeddable");
    assert_eq!(v["obstruction"]["b1"], 0);
}

#[test]
fn inconclusive_with_expectation_exits_one() {
    let dir = TempDir::new().unwrap();
    ok(dir.path(), &["generate", "cycle:3", "-o", "c.fl"]);
    ok(dir.path(), &["product", "c.fl", "c.fl", "-o", "torus.fl"]);
    let o = polycert(
        dir.path(),
        &[
            "obstruct",
            "torus.fl",
            "--curves",
            "2",
            "--expect-certificate",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("rank H^1 = 2"));
    assert!(!stderr(&o).is_empty());
    let plain = polycert(dir.path(), &["obstruct", "torus.fl", "--curves", "2"]);
    assert_eq!(plain.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = polycert(dir.path(), &["analyze", "missing.fl"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stdout(&missing).is_empty());
    assert!(stderr(&missing).contains("missing.fl"));

    std::fs::write(dir.path().join("bad.fl"), "0 1\n2 2\n").unwrap();
    let bad = polycert(dir.path(), &["classify", "bad.fl"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("line 2"));

    let unknown = polycert(dir.path(), &["generate", "klein_bottle", "-o", "k.fl"]);
    assert_eq!(unknown.status.code(), Some(2));

    let usage = polycert(dir.path(), &["obstruct", "x.fl"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn classify_lists_book_faces() {
    let dir = TempDir::new().unwrap();
    ok(dir.path(), &["generate", "book:3", "-o", "book3.fl"]);
    let out = ok(dir.path(), &["classify", "book3.fl"]);
    assert_eq!(out.matches("not quasi at").count(), 11);
    assert!(out.contains("ramified 2-complex: no"));
    let json = ok(dir.path(), &["classify", "book3.fl", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["quasi"]["non_quasi_faces"].as_array().unwrap().len(), 11);
}

#[test]
fn cohomology_absolute_and_relative() {
    let dir = TempDir::new().unwrap();
    ok(dir.path(), &["generate", "rp2_6", "-o", "rp2.fl"]);
    let out = ok(dir.path(), &["cohomology", "rp2.fl"]);
    assert!(out.contains("H~^2 = Z/2"));
    std::fs::write(dir.path().join("edge.fl"), "1 2\n").unwrap();
    let rel = ok(
        dir.path(),
        &["cohomology", "rp2.fl", "--relative", "edge.fl"],
    );
    assert!(rel.contains("H^2 = Z/2"));
    std::fs::write(dir.path().join("alien.fl"), "1 99\n").unwrap();
    let o = polycert(
        dir.path(),
        &["cohomology", "rp2.fl", "--relative", "alien.fl"],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_json_is_deterministic() {
    let dir = TempDir::new().unwrap();
    ok(dir.path(), &["generate", "wedge_spheres:2,2", "-o", "w.fl"]);
    let a = ok(dir.path(), &["analyze", "w.fl", "--json", "--curves", "2"]);
    let b = ok(dir.path(), &["analyze", "w.fl", "--json", "--curves", "2"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["quasi"]["quasi_everywhere"], true);
    assert_eq!(v["obstruction"]["verdict"], "NotEmbeddable");
    let text = ok(dir.path(), &["analyze", "w.fl"]);
    assert!(!text.contains('\x1b'));
}

#[test]
fn subdivide_preserves_cohomology_text() {
    let dir = TempDir::new().unwrap();
    ok(dir.path(), &["generate", "torus7", "-o", "t.fl"]);
    ok(dir.path(), &["subdivide", "t.fl", "-o", "sd.json"]);
    let original = ok(dir.path(), &["cohomology", "t.fl"]);
    let subdivided = ok(dir.path(), &["cohomology", "sd.json"]);
    assert_eq!(original, subdivided);
}

#[test]
fn batch_analysis_reports_each_file() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("corpus");
    std::fs::create_dir(&corpus).unwrap();
    for (name, file) in [("cycle:4", "a.fl"), ("sphere_boundary:2", "b.fl")] {
        let path = corpus.join(file);
        ok(
            dir.path(),
            &["generate", name, "-o", path.to_str().unwrap()],
        );
    }
    let out = ok(dir.path(), &["analyze", "--batch", "corpus", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["name"], "cycle:4");
    assert_eq!(reports[1]["name"], "sphere_boundary:2");

    std::fs::write(corpus.join("c.fl"), "").unwrap();
    let o = polycert(dir.path(), &["analyze", "--batch", "corpus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("complex: cycle:4"));
}

#[test]
fn stdout_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let text = ok(dir.path(), &["generate", "cycle:5", "-o", "-"]);
    assert!(text.starts_with("# name: cycle:5\n# dimension: 1\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 5);
}
