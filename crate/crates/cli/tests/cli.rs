use std::io::Write;
use std::path::Path;

use efl_cli::run_with;
use serde_json::Value;
use tempfile::NamedTempFile;

const TRI3: &str = "a b c\na d e\nb d f\n";

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn efl(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("efl").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn efl_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = efl(args);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, value)
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn validate_reports_standard_form() {
    let f = file_with(TRI3);
    let (code, v) = efl_json(&["validate", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["is_standard_form"], true);
    assert_eq!(v["degrees"]["a"], 2);

    let g = file_with("a b c\na b d\ne f g\n");
    let (code, v) = efl_json(&["validate", path(&g)]);
    assert_eq!(code, 1);
    assert_eq!(v["is_linear"], false);
}

#[test]
fn parse_errors_exit_2() {
    let f = file_with("a b c\na ! d\n");
    let (code, _, err) = efl(&["validate", path(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = efl(&["validate", "/nonexistent/file.txt"]);
    assert_eq!(code, 2);
    let (code, _, _) = efl(&["validate", "--frobnicate", path(&f)]);
    assert_eq!(code, 2);
}

#[test]
fn orient_g1_is_completable() {
    let f = file_with(TRI3);
    for kind in ["g1", "g2"] {
        let (code, v) = efl_json(&["orient", "--kind", kind, path(&f)]);
        assert_eq!(code, 0);
        assert_eq!(v["completable"], true);
        assert!(v["target"].is_object());
    }
}

#[test]
fn coeff_engines_agree() {
    let f = file_with(TRI3);
    for kind in ["g1", "g2"] {
        let (code, v) = efl_json(&["coeff", "--kind", kind, "--engine", "all", path(&f), "--target", "auto"]);
        assert_eq!(code, 0);
        assert_eq!(v["agree"], true);
        let c = &v["coefficients"];
        assert_eq!(c["expand"], c["orient"]);
        assert_eq!(c["expand"], c["formula"]);
    }
    let (_, v) = efl_json(&["coeff", "--kind", "g1", path(&f)]);
    assert_eq!(v["field"], "F3");
}

#[test]
fn coeff_explicit_target_round_trips() {
    let f = file_with(TRI3);
    let (_, auto) = efl_json(&["coeff", "--kind", "g2", "--engine", "orient", path(&f)]);
    let target = auto["target"].to_string();
    let (code, v) = efl_json(&["coeff", "--kind", "g2", "--engine", "orient", "--target", &target, path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["coefficients"], auto["coefficients"]);

    let (code, _, err) = efl(&["coeff", "--kind", "g2", "--target", r#"{"(1,1)": 1}"#, path(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("maximal"), "{err}");
}

#[test]
fn g1_requires_prime_n() {
    let f = file_with("a b c d\ne f g h\ni j k l\nm o p q\n");
    let (code, _, err) = efl(&["coeff", "--kind", "g1", "--engine", "orient", path(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("4"), "{err}");
}

#[test]
fn gen_output_feeds_other_commands() {
    let (code, out, _) = efl(&["gen", "--family", "truncated_projective_plane", "--q", "2"]);
    assert_eq!(code, 0);
    let f = file_with(&out);
    let (code, v) = efl_json(&["validate", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 7);

    let (_, a, _) = efl(&["gen", "--family", "random", "--n", "4", "--seed", "9"]);
    let (_, b, _) = efl(&["gen", "--family", "random", "--n", "4", "--seed", "9"]);
    assert_eq!(a, b);

    let (code, _, _) = efl(&["gen", "--family", "random"]);
    assert_eq!(code, 2);
}

#[test]
fn transforms() {
    let f = file_with(TRI3);
    let (code, v) = efl_json(&["dualize", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);

    let (_, v) = efl_json(&["derive", path(&f)]);
    assert_eq!(v["removed"], serde_json::json!(["c", "e", "f"]));

    let g = file_with("a b\nb c\n");
    let (code, v) = efl_json(&["uniformize", "--n", "3", path(&g)]);
    assert_eq!(code, 0);
    let out = file_with(&v.to_string());
    let (code, v) = efl_json(&["validate", path(&out)]);
    assert_eq!(code, 0);
    assert_eq!(v["is_standard_form"], true);
}

#[test]
fn aux_json_has_identifier_edges() {
    let f = file_with(TRI3);
    let (code, v) = efl_json(&["aux", "--kind", "g1", path(&f)]);
    assert_eq!(code, 0);
    let edges = v["identifier_edges"].as_array().unwrap();
    assert_eq!(edges.len(), 3);
    assert!(edges.iter().all(|e| e["mult"] == 2));
    let (_, v) = efl_json(&["aux", "--kind", "g2", path(&f)]);
    assert_eq!(v["identifier_edges"].as_array().unwrap().len(), 6);
}

#[test]
fn color_both_ways() {
    let f = file_with(TRI3);
    for via in ["oracle", "nullstellensatz"] {
        let (code, v) = efl_json(&["color", "--via", via, path(&f)]);
        assert_eq!(code, 0, "{via}");
        assert_eq!(v["verified"], true);
    }
    let (code, v) = efl_json(&["color", "--via", "nullstellensatz", "--kind", "g2", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["verified"], true);
}

#[test]
fn search_is_deterministic_and_resumable() {
    let args = ["search", "--n", "3", "--samples", "6", "--seed", "4", "--kind", "g2", "--tree-limit", "2"];
    let (code, all, _) = efl(&args);
    assert_eq!(code, 0);
    let lines: Vec<Value> = all.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l["nonzero_found"] == true && l["engine"] == "orient"));

    let (_, again, _) = efl(&args);
    assert_eq!(all, again);

    let mut resumed = args.to_vec();
    resumed.extend(["--skip", "4"]);
    let (_, tail, _) = efl(&resumed);
    let tail: Vec<&str> = tail.lines().collect();
    assert_eq!(tail, all.lines().skip(4).collect::<Vec<_>>());

    let (code, _, err) = efl(&["search", "--n", "6", "--samples", "1", "--kind", "g2"]);
    assert_eq!(code, 2);
    assert!(err.contains("n <= 4"), "{err}");
}

#[test]
fn binary_runs() {
    let bin = Path::new(env!("CARGO_BIN_EXE_efl"));
    let f = file_with(TRI3);
    let status = std::process::Command::new(bin)
        .args(["validate", path(&f)])
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
}
