use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const S3: &str = "group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }";

fn tsl(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tsl"))
        .args(args)
        .env_remove("TSL_BUDGET_COSETS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write_file(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn describe_reports_order_and_abelianization() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "s3.grp", S3);
    let out = tsl(&["describe", &file, "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 6);
    assert_eq!(v["abelianization"]["torsion"], serde_json::json!([2]));
    let text = tsl(&["describe", "-"], Some(S3));
    assert!(String::from_utf8_lossy(&text.stdout).contains("C2"));
}

#[test]
fn describe_of_an_infinite_group_is_not_an_error() {
    let out = tsl(&["describe", "-", "--max-cosets", "5000"], Some("group Z2 { gens: a, b; rels: [a,b]; }"));
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("INFINITE-OR-BUDGET"));
}

#[test]
fn input_errors_exit_with_two() {
    let undeclared = tsl(&["describe", "-"], Some("group X { gens: a; rels: b^2; }"));
    assert_eq!(undeclared.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&undeclared.stderr).contains("b"));
    assert_eq!(tsl(&["describe", "/nonexistent/file.grp"], None).status.code(), Some(2));
    assert_eq!(tsl(&["claims", "run", "--only", "C99"], None).status.code(), Some(2));
    assert_eq!(tsl(&["family", "ks", "--p", "4", "--s", "1"], None).status.code(), Some(2));
}

#[test]
fn tensor_of_an_infinite_group_exits_with_three() {
    let out = tsl(&["tensor", "-", "--max-cosets", "5000"], Some("group Z { gens: a; rels: 1; }"));
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--mod"));
}

#[test]
fn tensor_reports_both_methods() {
    let out = tsl(&["tensor", "-", "--method", "both", "--format", "json"], Some(S3));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["methods_agree"], true);
    for r in v["reports"].as_array().unwrap() {
        assert_eq!(r["tensor_order"], 6);
        assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] != "FAIL"));
    }
}

#[test]
fn family_output_feeds_the_tensor_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a4.grp");
    let out = tsl(&["family", "gn", "--n", "3", "--mod", "2", "-o", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let d = tsl(&["describe", path.to_str().unwrap(), "--format", "json"], None);
    assert_eq!(json(&d)["order"], 12);
    let t = tsl(&["tensor", path.to_str().unwrap(), "--format", "json"], None);
    assert_eq!(t.status.code(), Some(0));
    // A4 ⊗ A4: |∇| = |Γ(C3)| = 3 and |A4 ∧ A4| = |M||[A4,A4]| = 2·4
    assert_eq!(json(&t)["tensor_order"], 24);
}

#[test]
fn family_json_carries_the_claimed_values() {
    let out = tsl(&["family", "ks", "--p", "3", "--s", "2", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["h_claimed"], 6);
    assert_eq!(v["padic_generators"].as_array().unwrap().len(), 6);
}

#[test]
fn claims_list_names_every_claim() {
    let out = tsl(&["claims", "list"], None);
    let text = String::from_utf8_lossy(&out.stdout);
    for i in 1..=18 {
        assert!(text.contains(&format!("C{i:02}")), "C{i:02}");
    }
}

#[test]
fn strict_mode_accepts_the_known_discrepancies() {
    let out = tsl(&["claims", "run", "--only", "C13,C14", "--strict-consistent"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("C13 MISMATCH") && lines[1].starts_with("C14 MISMATCH"), "{text}");
}

#[test]
fn exact_claims_match_the_golden_file() {
    let out = tsl(&["claims", "run", "--mode", "exact", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/claims_exact.json");
    if std::env::var_os("TSL_UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &out.stdout).unwrap();
    }
    let expected = std::fs::read_to_string(&golden).unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}
