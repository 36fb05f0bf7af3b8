use std::process::{Command, Output};

use serde_json::Value;

const SIGMA: &str = "band: d ~c ~a b (d ~c)^2 ~a b @ 1";
const TAU: &str = "band: (d ~c)^2 ~a b @ 1";

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gentle-cones"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn kron_file(dir: &tempfile::TempDir) -> String {
    let path = dir.path().join("kron2.json");
    std::fs::write(&path, gentle_cones::fixtures::KRONECKER_JSON).unwrap();
    path.display().to_string()
}

#[test]
fn cone_compute_finds_the_indecomposable_summand() {
    let dir = tempfile::tempdir().unwrap();
    let alg = kron_file(&dir);
    let o = cli(&[
        "cone",
        "compute",
        "--algebra",
        &alg,
        "--source",
        TAU,
        "--target",
        SIGMA,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("B(").count(), 1, "{out}");
    assert!(out.contains("B(a c ~d ~b; -1)"), "{out}");
}

#[test]
fn cone_compute_json_round_trips() {
    let o = cli(&[
        "--json",
        "cone",
        "compute",
        "--algebra",
        "@kronecker",
        "--source",
        TAU,
        "--target",
        SIGMA,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    let cone = v["cone"].as_array().unwrap();
    assert_eq!(cone.len(), 1);
    assert_eq!(cone[0]["type"], "band");
    assert_eq!(cone[0]["scalar"], "-1");
    assert_eq!(cone[0]["dim"], 1);
}

#[test]
fn cone_verify_reports_iso_on_golden_cases() {
    let cases = [
        ("@kronecker", TAU, SIGMA, "graph"),
        (
            "@kronecker",
            "band: (d ~c)^7 ~a b @ -1",
            "band: (d ~c)^4 ~a b @ 1",
            "graph",
        ),
        (
            "@final",
            "band: ~a b*c ~a b ~e d*b*c @ 36",
            "band: e ~d*b @ 4 deg=-2",
            "single",
        ),
    ];
    for (alg, s, t, kind) in cases {
        let o = cli(&[
            "cone",
            "verify",
            "--algebra",
            alg,
            "--source",
            s,
            "--target",
            t,
            "--kind",
            kind,
            "--jobs",
            "2",
        ]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{out}");
        assert!(out.contains("iso: true"), "{out}");
    }
}

#[test]
fn cyclotomic_field_agrees() {
    let o = cli(&[
        "--json",
        "cone",
        "verify",
        "--algebra",
        "@kronecker",
        "--source",
        TAU,
        "--target",
        SIGMA,
        "--field",
        "cyclo",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["iso"], true);
    assert!(
        v["report"]["field"].as_str().unwrap().starts_with('Q'),
        "{v}"
    );
}

#[test]
fn identical_inputs_give_identical_output() {
    let args = [
        "cone",
        "verify",
        "--algebra",
        "@kronecker",
        "--source",
        TAU,
        "--target",
        SIGMA,
        "--all",
        "--jobs",
        "4",
        "--seed",
        "7",
    ];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn word_check_accepts_the_trivial_string() {
    let o = cli(&["word", "check", "--algebra", "@kronecker", "--string", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid trivial string"));
}

#[test]
fn hom_list_is_longest_overlap_first() {
    let o = cli(&[
        "--json",
        "hom",
        "list",
        "--algebra",
        "@kronecker",
        "--source",
        TAU,
        "--target",
        SIGMA,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lens: Vec<i64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["overlap"]["len"].as_i64().unwrap_or(0))
        .collect();
    assert!(!lens.is_empty());
    assert!(lens.windows(2).all(|w| w[0] >= w[1]), "{lens:?}");
}

#[test]
fn complex_show_and_diagram_emit() {
    let o = cli(&[
        "complex",
        "show",
        "--algebra",
        "@kronecker",
        "--word",
        "band: d ~c ~a b @ 2",
        "--dim",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());

    let dir = tempfile::tempdir().unwrap();
    let tikz = dir.path().join("cone.tex");
    let o = cli(&[
        "diagram",
        "emit",
        "--algebra",
        "@kronecker",
        "--source",
        TAU,
        "--target",
        SIGMA,
        "--tikz",
        tikz.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(cyclic)"));
    assert!(std::fs::read_to_string(&tikz)
        .unwrap()
        .contains("\\begin{tikzpicture}"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    // A loop with no relation: infinite dimensional.
    std::fs::write(
        &bad,
        r#"{"vertices":[1],"arrows":[{"name":"x","from":1,"to":1}],"relations":[]}"#,
    )
    .unwrap();
    let o = cli(&["algebra", "validate", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--algebra"));

    let o = cli(&["algebra", "validate", "--algebra", &kron_file(&dir)]);
    assert_eq!(o.status.code(), Some(0));

    let o = cli(&["word", "check", "--algebra", "@kronecker", "--band", "d ~a"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(
        cli(&["cone", "compute", "--algebra", "@kronecker"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(2));
}
