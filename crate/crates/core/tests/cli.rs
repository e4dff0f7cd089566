use std::path::PathBuf;
use std::process::{Command, Output};

use coleman::PadicNumber;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn coleman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coleman")).args(args).output().unwrap()
}

fn stdout_lines(o: &Output) -> Vec<String> {
    String::from_utf8(o.stdout.clone()).unwrap().lines().map(str::to_string).collect()
}

fn temp_curve(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("coleman-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn integrate_basis_torsion_curve() {
    let o = coleman(&["integrate-basis", "--curve", &data("torsion11.json"), "--from", "(-1,1)", "--to", "(0,1/4)"]);
    assert!(o.status.success());
    let lines = stdout_lines(&o);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[..3], ["O(11^6)", "O(11^6)", "7*11 + 6*11^2 + 3*11^3 + 11^4 + 5*11^5 + O(11^6)"]);
    // timing goes to stderr only
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed"));
}

#[test]
fn integrate_from_infinity_rank_one_curve() {
    let o = coleman(&["integrate", "--curve", &data("rank_one7.json"), "--from", "inf", "--to", "(3,6)", "--coeffs", "1,0,0,0"]);
    assert!(o.status.success());
    assert_eq!(stdout_lines(&o), ["6*7 + 6*7^2 + 3*7^3 + 3*7^4 + 2*7^5 + O(7^6)"]);
}

#[test]
fn json_matches_text() {
    let base = ["integrate-basis", "--curve", &data("rank_one7.json"), "--from", "(3,6)", "--to", "(10,-120)"];
    let text = coleman(&base);
    let json = coleman(&[&base[..], &["--json"]].concat());
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let values: Vec<String> = doc["values"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    assert_eq!(values, stdout_lines(&text));
    assert!(doc["audited_prec"].as_i64().unwrap() >= 6);
    for v in &values {
        assert_eq!(PadicNumber::parse(v, 7, 6).unwrap().render(), *v);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["frobenius", "--curve", &data("rank_one7.json"), "--json"];
    let (a, b) = (coleman(&args), coleman(&args));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["matrix"].as_array().unwrap().len(), 4);
}

#[test]
fn rendered_points_are_accepted() {
    let t = coleman(&["teichmuller", "--curve", &data("rank_one7.json"), "--point", "(3,6)"]);
    assert!(t.status.success());
    let line = &stdout_lines(&t)[0];
    let o = coleman(&["tiny", "--curve", &data("rank_one7.json"), "--from", "(3,6)", "--to", line]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout_lines(&o).len(), 4);
}

#[test]
fn zeta_numerator_hint() {
    let o = coleman(&["zeta-numerator", "--curve", &data("rank_one7.json")]);
    let hints: Vec<String> = stdout_lines(&o).iter().map(|l| l.rsplit("~ ").next().unwrap().to_string()).collect();
    assert_eq!(hints, ["1", "0", "-2", "0", "49"]);
}

fn error_code(o: &Output) -> String {
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    err.split(':').nth(1).unwrap().trim().to_string()
}

#[test]
fn error_codes() {
    let bad = temp_curve("bad", r#"{"p": 7, "digits": 6, "f": ["0", "0", "1", "0", "0", "1"]}"#);
    assert_eq!(error_code(&coleman(&["validate", "--curve", &bad])), "BAD_REDUCTION");
    let junk = temp_curve("junk", r#"{"p": 7, "f": 3}"#);
    assert_eq!(error_code(&coleman(&["validate", "--curve", &junk])), "MALFORMED_INPUT");
    let rank_one = data("rank_one7.json");
    let off = coleman(&["integrate-basis", "--curve", &rank_one, "--from", "(3,6)", "--to", "(4,1)"]);
    assert_eq!(error_code(&off), "NOT_ON_CURVE");
    let weier = coleman(&["integrate-basis", "--curve", &rank_one, "--from", "(0,0)", "--to", "(3,6)"]);
    assert_eq!(error_code(&weier), "DISC_VIOLATION");
    let pole = coleman(&["integrate", "--curve", &rank_one, "--from", "inf", "--to", "(3,6)", "--coeffs", "0,0,1,0"]);
    assert_eq!(error_code(&pole), "POLE_AT_ENDPOINT");
    assert_eq!(error_code(&coleman(&["frobenius"])), "USAGE");
}

#[test]
fn validate_prints_genus() {
    let o = coleman(&["validate", "--curve", &data("torsion11.json")]);
    assert_eq!(stdout_lines(&o), ["genus 2"]);
}
