use std::process::{Command, Output};

use jahangir_cli::{main_with, EXIT_COMPUTE, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jahangir"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn jahangir")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = main_with(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn hosoya_and_wiener_text() {
    let o = run(&[
        "hosoya", "--family", "jahangir", "--n", "5", "--m", "6", "--format", "text",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "36x + 57x^2 + 102x^3 + 120x^4 + 108x^5 + 42x^6\n");
    let o = run(&["wiener", "--family", "jahangir", "--n", "5", "--m", "6"]);
    assert_eq!(stdout(&o), "1728\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn hosoya_json_is_coefficient_array() {
    let (code, out, _) = in_process(&["hosoya", "--family", "path", "--m", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!([0, 1]));
}

#[test]
fn generate_round_trips_through_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j53.edges");
    let o = run(&["generate", "--family", "jahangir", "--n", "5", "--m", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("p 16 18\ne 0 1\n"));
    std::fs::write(&path, &text).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&run(&["hosoya", "--input", p])),
        "18x + 24x^2 + 33x^3 + 24x^4 + 18x^5 + 3x^6\n"
    );
    assert_eq!(
        stdout(&run(&["distances", "--input", p])),
        "1 18\n2 24\n3 33\n4 24\n5 18\n6 3\n"
    );
    assert_eq!(stdout(&run(&["generate", "--input", p])), text);
}

#[test]
fn verify_json_report() {
    let (code, out, _) = in_process(&["verify", "--n", "5", "--m-range", "3..50", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["family"], "jahangir");
    assert_eq!(v["n"], 5);
    assert_eq!(v["errata"], serde_json::json!(["eq15", "eq9"]));
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 48);
    assert!(results.iter().all(|r| r["pass"] == true));
    assert_eq!(results[3]["m"], 6);
    assert_eq!(results[3]["wiener_oracle"], 1728);
}

#[test]
fn fit_workflow() {
    let args = [
        "fit",
        "--n",
        "5",
        "--samples",
        "3,4,5",
        "--degree",
        "2",
        "--holdout",
        "6,7,8",
    ];
    let (code, out, _) = in_process(&args);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("d(4) = -4m + 4m^2"));
    assert!(out.contains("W = -42m + 55m^2"));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (_, out, _) = in_process(&json_args);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holdout"]["pass"], true);
    assert_eq!(
        v["formula"]["wiener"],
        serde_json::json!([{"num": 0, "den": 1}, {"num": -42, "den": 1}, {"num": 55, "den": 1}])
    );
}

#[test]
fn underfit_is_a_verification_failure() {
    let (code, out, _) = in_process(&["fit", "--n", "5", "--samples", "3,4", "--degree", "1", "--holdout", "6"]);
    assert_eq!(code, EXIT_VERIFY);
    assert!(out.contains("FAIL"));
}

#[test]
fn exit_codes_and_streams() {
    let o = run(&["hosoya", "--family", "jahangir", "--n", "5", "--m", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--m"));

    let o = run(&["wiener", "--frobnicate"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--frobnicate"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.edges");
    std::fs::write(&path, "p 4 2\ne 0 1\ne 2 3\n").unwrap();
    let o = run(&["wiener", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_COMPUTE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));

    std::fs::write(&path, "p 2 1\ne 0 0\n").unwrap();
    let o = run(&["hosoya", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_COMPUTE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-loop"));

    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn random_family_is_reproducible() {
    let args = [
        "generate", "--family", "random", "--m", "30", "--p", "1/10", "--seed", "123",
    ];
    let a = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, run(&args).stdout);
    assert!(stdout(&a).starts_with("p 30 "));
}
