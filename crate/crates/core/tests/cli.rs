use std::path::PathBuf;
use std::process::Command;

use janet_stanley::cli::{self, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Outcome {
    cli::run(std::iter::once("janet").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("janet-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn partition_of_projective_plane() {
    let out = run(&["partition", "--input", &data("rp2.cplx"), "--check-nice"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let intervals = out.stdout.lines().filter(|l| l.starts_with('[')).count();
    assert_eq!(intervals, 11, "{}", out.stdout);
    assert!(out.stdout.contains("[{}, {124}]"));
    assert!(out.stdout.contains("nice: false"));
    assert!(out.stdout.contains("non-facet upper: {23}"));
}

#[test]
fn partition_reports_r_vector() {
    let out = run(&["partition", "--input", &data("rp2.cplx"), "--r-vector"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.contains("r-vector: (2, 5, 3, 1)"),
        "{}",
        out.stdout
    );
    assert!(!out.stdout.contains("nice:"));
}

#[test]
fn complement_of_an_edge() {
    let out = run(&[
        "decompose",
        "--input",
        &data("edge.ideal"),
        "--target",
        "complement",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1 * K[x1]\nx2 * K[x2]\n");
    // complement is the default target
    assert_eq!(run(&["decompose", "--input", &data("edge.ideal")]), out);
}

#[test]
fn ideal_target_of_an_edge() {
    let out = run(&[
        "decompose",
        "--input",
        &data("edge.ideal"),
        "--target",
        "ideal",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "x1*x2 * K[x1, x2]\n");
}

#[test]
fn verify_modes_exit_zero() {
    for (file, mode) in [
        ("rp2.cplx", "correspondence"),
        ("rp2.cplx", "partition"),
        ("mixed.ideal", "ideal"),
        ("mixed.ideal", "complement"),
        ("path.ideal", "complement"),
    ] {
        let out = run(&["verify", "--input", &data(file), "--mode", mode]);
        assert_eq!(out.code, 0, "{file} {mode}: {}{}", out.stdout, out.stderr);
        assert!(out.stdout.starts_with(&format!("mode: {mode}\n")));
        assert!(out.stdout.ends_with("ok\n"));
    }
}

#[test]
fn verify_accepts_degree_bound_and_reversal() {
    let out = run(&[
        "verify",
        "--input",
        &data("mixed.ideal"),
        "--max-degree",
        "3",
        "--reverse-vars",
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    // 1 + 4 + 10 + 20 monomials of degree at most 3 in four variables
    assert!(out.stdout.contains("checked: 35\n"), "{}", out.stdout);
}

#[test]
fn reversed_output_uses_original_labels() {
    let plain = run(&["decompose", "--input", &data("mixed.ideal")]);
    let rev = run(&[
        "decompose",
        "--input",
        &data("mixed.ideal"),
        "--reverse-vars",
    ]);
    assert_eq!(rev.code, 0);
    assert_ne!(plain.stdout, rev.stdout);
    let p = run(&["partition", "--input", &data("rp2.cplx"), "--reverse-vars"]);
    assert_eq!(p.code, 0);
    assert!(p.stdout.lines().all(|l| !l.contains('0')));
}

#[test]
fn json_output_fields() {
    let out = run(&[
        "decompose",
        "--input",
        &data("path.ideal"),
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["kind"], "decomposition");
    assert_eq!(v["target"], "complement");
    assert_eq!(v["arity"], 3);
    assert_eq!(v["sdepth"], 1);
    assert!(v["spaces"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["coeff"].is_array() && s["vars"].is_array()));

    let out = run(&[
        "partition",
        "--input",
        &data("rp2.cplx"),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["kind"], "partition");
    assert_eq!(v["arity"], 6);
    assert_eq!(v["intervals"].as_array().unwrap().len(), 11);
    assert_eq!(v["r_vector"], serde_json::json!([2, 5, 3, 1]));
    assert_eq!(v["nice"], false);
}

#[test]
fn wide_complexes_render_in_list_style() {
    let out = run(&["partition", "--input", &data("wide.cplx")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("{1,"), "{}", out.stdout);
    assert!(out.stdout.contains("11"));
}

#[test]
fn info_summarizes_documents() {
    let out = run(&["info", "--input", &data("rp2.cplx")]);
    assert_eq!(
        out.stdout,
        "kind: complex\nvertices: 6\nfacets: 10\ndimension: 2\nfaces: 32\n"
    );
    let out = run(&["info", "--input", &data("mixed.ideal")]);
    assert!(out
        .stdout
        .starts_with("kind: ideal\narity: 4\ngenerators: 4\nsquarefree: false\n"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let bad = scratch("bad.ideal", "vars 2\nx1*x3\n");
    let out = run(&["decompose", "--input", &bad]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains(":2:"), "{}", out.stderr);
}

#[test]
fn missing_files_exit_two() {
    let out = run(&["info", "--input", "/nonexistent/janet.ideal"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot read"));
}

#[test]
fn document_kind_mismatch_exits_two() {
    let out = run(&["partition", "--input", &data("edge.ideal")]);
    assert_eq!(out.code, 2);
    let out = run(&["decompose", "--input", &data("rp2.cplx")]);
    assert_eq!(out.code, 2);
    let out = run(&[
        "verify",
        "--input",
        &data("edge.ideal"),
        "--mode",
        "correspondence",
    ]);
    assert_eq!(out.code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["decompose", "--target", "nonsense"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn binary_reads_standard_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_janet"))
        .args(["decompose", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"vars 2\nx1*x2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1 * K[x1]\nx2 * K[x2]\n"
    );
}

#[test]
fn binary_exit_status_on_bad_input() {
    let status = Command::new(env!("CARGO_BIN_EXE_janet"))
        .args(["info", "--input", "/nonexistent/janet.cplx"])
        .stderr(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}
