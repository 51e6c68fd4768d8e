//! End-to-end CLI checks: text reports against committed goldens, exit-code
//! contract, tolerance-flag plumbing, `--out` behavior, and JSON round
//! trips. Every invocation runs the compiled binary.

use std::process::{Command, Output};

fn manifest() -> &'static str {
    env!("CARGO_MANIFEST_DIR")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcmx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", manifest())
}

fn golden(name: &str) -> Vec<u8> {
    std::fs::read(format!("{}/tests/goldens/{name}", manifest())).expect("golden present")
}

#[test]
fn text_reports_match_goldens() {
    let cases: &[(&str, &str, &str, i32)] = &[
        ("eig", "example1.json", "eig_example1.txt", 1),
        ("eig", "example2.json", "eig_example2.txt", 0),
        ("jordan", "example1.json", "jordan_example1.txt", 0),
        ("jordan", "example4.json", "jordan_example4.txt", 0),
        ("jordan", "fallback.json", "jordan_fallback.txt", 0),
        ("diag", "example4.json", "diag_example4.txt", 1),
        ("invert", "example4.json", "invert_example4.txt", 0),
        (
            "verify",
            "verify_family_member.json",
            "verify_family.txt",
            0,
        ),
        ("hermitian", "hermitian.json", "hermitian.txt", 0),
    ];
    for (verb, input, gold, code) in cases {
        let path = fixture(input);
        let first = run(&[verb, &path]);
        let second = run(&[verb, &path]);
        assert_eq!(
            first.status.code(),
            Some(*code),
            "{verb} {input}: wrong exit code, stderr: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(
            first.stdout, second.stdout,
            "{verb} {input}: not byte-stable"
        );
        assert_eq!(
            first.stdout,
            golden(gold),
            "{verb} {input}: drifted from {gold}"
        );
    }
}

#[test]
fn out_flag_writes_the_report_without_stdout() {
    let dir = std::env::temp_dir().join("dcmx-out-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let path = fixture("example2.json");

    let direct = run(&["eig", &path, "--format", "json"]);
    let to_file = run(&[
        "eig",
        &path,
        "--format",
        "json",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty(), "--out must silence stdout");
    let written = std::fs::read(&out_path).unwrap();
    assert_eq!(
        written, direct.stdout,
        "--out content differs from stdout content"
    );
    std::fs::remove_file(&out_path).ok();
}

#[test]
fn tolerance_flags_reach_the_solvers() {
    // A Jordan-block matrix whose corner dual entry is 1e-13: appreciable
    // only below the default absolute tolerance.
    let tiny = fixture("tiny_corner.json");
    assert_eq!(
        run(&["eig", &tiny]).status.code(),
        Some(0),
        "default: infinite family"
    );
    assert_eq!(
        run(&["eig", &tiny, "--tol-abs", "1e-15"]).status.code(),
        Some(1),
        "tight abs tolerance: the 1e-13 corner becomes an obstruction"
    );

    // Standard part diag(1, 1e-8): invertible at the default rank
    // threshold, singular at a coarser one.
    let near = fixture("near_singular.json");
    assert_eq!(run(&["invert", &near]).status.code(), Some(0));
    assert_eq!(
        run(&["invert", &near, "--tol-rank", "1e-6"]).status.code(),
        Some(3),
        "coarse rank tolerance: standard part ruled singular"
    );

    // Standard eigenvalues 1 and 1+1e-7: ambiguous at the default cluster
    // radius, cleanly separated at a finer one.
    let close = fixture("close_eigs.json");
    assert_eq!(run(&["jordan", &close]).status.code(), Some(3));
    assert_eq!(
        run(&["jordan", &close, "--tol-cluster", "1e-9"])
            .status
            .code(),
        Some(0),
        "fine cluster tolerance: eigenvalues resolved, canonical form built"
    );
}

#[test]
fn input_errors_exit_two_with_messages() {
    for (verb, input) in [
        ("eig", "nonsquare.json"),
        ("eig", "malformed.json"),
        ("eig", "nonfinite.json"),
        ("jordan", "nonsquare.json"),
        ("invert", "malformed.json"),
    ] {
        let out = run(&[verb, &fixture(input)]);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{verb} {input}: expected input-error exit"
        );
        assert!(out.stdout.is_empty(), "{verb} {input}: no report on stdout");
        assert!(
            !out.stderr.is_empty(),
            "{verb} {input}: expected a diagnostic on stderr"
        );
    }
    let missing = run(&["eig", &fixture("no_such_file.json")]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());
}

#[test]
fn invert_json_round_trips_through_the_binary() {
    // example4's matrix has dyadic-rational entries, so inverting twice is
    // exact and the wire form must reproduce the original bytes.
    let original = run(&["invert", &fixture("example4.json"), "--format", "json"]);
    assert_eq!(original.status.code(), Some(0));

    let dir = std::env::temp_dir().join("dcmx-roundtrip-test");
    std::fs::create_dir_all(&dir).unwrap();
    let inv_path = dir.join("inverse.json");
    std::fs::write(&inv_path, &original.stdout).unwrap();

    let twice = run(&["invert", inv_path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(twice.status.code(), Some(0));

    // Parse both the original fixture and the double inverse through the
    // library and compare the canonical serializations.
    let a =
        dcmx::json::matrix_from_str(&std::fs::read_to_string(fixture("example4.json")).unwrap())
            .unwrap();
    let b = dcmx::json::matrix_from_str(std::str::from_utf8(&twice.stdout).unwrap()).unwrap();
    assert_eq!(
        dcmx::json::matrix_to_json(&a).to_string(),
        dcmx::json::matrix_to_json(&b).to_string(),
        "double inverse drifted from the original"
    );
    std::fs::remove_file(&inv_path).ok();
}
