use std::io::Write;
use std::process::{Command, Stdio};

use fpdim::cli::{run, Report, Status};

const TRUNC: &str = r#"{"kind":"family","name":"trunc","p":2,"n":2,"deg":2}"#;
const CHAIN: &str = r#"{"kind":"family","name":"chain","p":2,"k":2}"#;
const PLANE: &str = r#"{"kind":"poly","p":2,"variables":["x","y"]}"#;

fn fpdim(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("fpdim").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn classify_report_round_trips_byte_stable() {
    let (code, a, _) = fpdim(&["classify", TRUNC]);
    assert_eq!(code, 0);
    let (_, b, _) = fpdim(&["classify", TRUNC]);
    assert_eq!(a, b);
    let report = Report::from_json(&a).unwrap();
    assert_eq!(report.status, Status::Ok);
    assert_eq!(report.command, "classify");
    assert_eq!(report.to_json(), a);
    assert!(report.timings.is_none());
}

#[test]
fn grade_and_fpd_over_the_plane() {
    let (code, out, _) = fpdim(&["grade", PLANE, "--ideal", "x,y,x+y"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["grade"], "2");

    let (code, out, _) = fpdim(&["fpd", PLANE, "--maximal", "x,y"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"fpd_lower_bound\": 2"), "{out}");
}

#[test]
fn exit_codes() {
    let (code, _, _) = fpdim(&["classify", CHAIN, "--weak-d", "3", "--cutoff", "1"]);
    assert_eq!(code, 2);

    let (code, _, err) = fpdim(&["ring", "show", r#"{"kind":"bogus"}"#]);
    assert_eq!(code, 1);
    assert!(err.contains("kind"), "{err}");

    let (code, _, err) = fpdim(&["grade", TRUNC, "--ideal", "q"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");

    let (code, out, _) = fpdim(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-theorems"));
}

#[test]
fn injected_fault_is_caught() {
    let (code, out, _) = fpdim(&[
        "verify-theorems",
        "--random",
        "5",
        "--inject-fault",
        "duality",
    ]);
    assert_eq!(code, 1);
    let report = Report::from_json(&out).unwrap();
    assert_eq!(report.status, Status::Violation);
    assert_eq!(report.results["all_passed"], false);

    let (code, _, _) = fpdim(&["verify-theorems", "--random", "5"]);
    assert_eq!(code, 0);
}

#[test]
fn examples_table_alias() {
    let (a_code, a, _) = fpdim(&["examples-table"]);
    let (b_code, b, _) = fpdim(&["paper-examples"]);
    assert_eq!((a_code, b_code), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn table_output() {
    let (code, out, _) = fpdim(&["ring", "show", CHAIN, "--table"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("command: ring show\n"), "{out}");
}

#[test]
fn spec_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fpdim"))
        .args(["ring", "show", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(TRUNC.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let report = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.command, "ring show");
}
