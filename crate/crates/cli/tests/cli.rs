use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn repkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repkit")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = repkit(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn show_builtin_tables() {
    assert_eq!(stdout(&["chartab", "show", "S3"]), golden("chartab_show_S3.txt"));
    assert_eq!(stdout(&["chartab", "show", "Q8"]), golden("chartab_show_Q8.txt"));
    assert_eq!(stdout(&["chartab", "show", "A5"]), golden("chartab_show_A5.txt"));
    assert_eq!(stdout(&["--numeric", "chartab", "show", "A5"]), golden("chartab_show_A5_numeric.txt"));
}

#[test]
fn sn_table_matches_builtin_s3() {
    assert_eq!(stdout(&["sn", "table", "--n", "3"]).lines().count(), 5);
    assert_eq!(stdout(&["chartab", "show", "S_3"]), stdout(&["sn", "table", "--n", "3"]));
}

#[test]
fn e8_root_count() {
    assert_eq!(stdout(&["quiver", "roots", "--type", "E8", "--count"]), "positive: 120, total: 240\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--json", "quiver", "roots", "--type", "E8", "--count"])).unwrap();
    assert_eq!(json["positive"], 120);
}

#[test]
fn sn_values() {
    assert_eq!(stdout(&["sn", "char", "--lambda", "2,1", "--class", "3"]), "-1\n");
    assert_eq!(stdout(&["sn", "char", "--lambda", "3,2", "--class", "1,1,1,1,1"]), "5\n");
    assert_eq!(stdout(&["sn", "dim", "--lambda", "4,2,1"]), "35\n");
    assert_eq!(stdout(&["sn", "kostka", "--lambda", "1,1,1", "--mu", "2,1"]), "2\n");
    assert_eq!(stdout(&["sn", "kostka", "--lambda", "2,1", "--mu", "1,1,1"]), "0\n");
    assert_eq!(stdout(&["sn", "u", "--lambda", "2,1", "--class", "1,1,1"]), "3\n");
    assert_eq!(repkit(&["sn", "char", "--lambda", "2,1", "--class", "2"]).status.code(), Some(1));
}

#[test]
fn schur_commands() {
    assert_eq!(stdout(&["schur", "eval", "--lambda", "1", "--points", "1,2,3"]), "6\n");
    assert_eq!(stdout(&["schur", "eval", "--lambda", "2,1", "--points", "1,2"]), "6\n");
    assert_eq!(stdout(&["schur", "dim", "--lambda", "1,0,-1", "--n", "3"]), "8\n");
    assert_eq!(stdout(&["schur", "dim", "--lambda", "2", "--n", "3"]), "6\n");
    let repeated = repkit(&["schur", "eval", "--lambda", "2,1", "--points", "1,1,1"]);
    assert_eq!(repeated.status.code(), Some(1));
}

#[test]
fn tensor_fs_decompose() {
    assert_eq!(stdout(&["chartab", "tensor", "A5", "C^3-", "C^3-"]), "C^3- x C^3- = C + C^3- + C^5\n");
    assert_eq!(stdout(&["chartab", "tensor", "S4", "C^2", "C^2"]), "C^2 x C^2 = C+ + C- + C^2\n");
    let fs = stdout(&["chartab", "fs", "Q8"]);
    assert!(fs.contains("C^2: -1"), "{fs}");
    assert_eq!(stdout(&["chartab", "decompose", "S3", "--values", "6,0,0"]), "C+ + C- + 2C^2\n");
    assert_eq!(stdout(&["chartab", "decompose", "S3", "--values", "1,1,-2"]), "-C- + C^2\nvirtual character\n");
    assert_eq!(stdout(&["chartab", "decompose", "S3", "--values", "1/2,0,0"]), "1/12C+ + 1/12C- + 1/6C^2\nnot a virtual character\n");
}

#[test]
fn induce_and_restrict() {
    let ind = stdout(&["chartab", "induce", "--group", "S3", "--gen", "(123)", "--row", "1"]);
    assert_eq!(ind, "values: 2, 0, -1\nC^2\n");
    let res = stdout(&["chartab", "restrict", "--group", "S4", "--gen", "(12)", "--gen", "(1 2 3)", "--sub-table", "S3", "--row", "C^3+"]);
    assert!(res.ends_with("C+ + C^2\n") || res.ends_with("C- + C^2\n"), "{res}");
}

#[test]
fn group_classes() {
    let out = stdout(&["group", "classes", "A4"]);
    assert!(out.starts_with("A4 of order 12, 4 classes\n"), "{out}");
    let out = stdout(&["group", "classes", &fixture("s3_spec.json")]);
    assert!(out.contains("of order 6, 3 classes"), "{out}");
}

#[test]
fn gl2_commands() {
    assert_eq!(stdout(&["gl2", "classes", "--q", "3"]), golden("gl2_classes_3.txt"));
    let verify = stdout(&["gl2", "verify", "--q", "5"]);
    assert!(verify.lines().all(|l| l.ends_with(": ok")), "{verify}");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--json", "gl2", "table", "--q", "3"])).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 8);
    assert_eq!(json["classes"][0]["descriptor"]["family"], "scalar");
    assert_eq!(repkit(&["gl2", "table", "--q", "9"]).status.code(), Some(1));
}

#[test]
fn semidirect_tables() {
    let h = stdout(&["semidirect", "table", "--heisenberg", "3"]);
    assert!(h.lines().next().unwrap().contains("1a"), "{h}");
    let d = stdout(&["--json", "semidirect", "table", "--dihedral", "5"]);
    let json: serde_json::Value = serde_json::from_str(&d).unwrap();
    let mut degrees: Vec<u64> = json["rows"].as_array().unwrap().iter().map(|r| r["degree"].as_u64().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, [1, 1, 2, 2]);
}

#[test]
fn quiver_commands() {
    assert_eq!(stdout(&["quiver", "classify", "--type", "D4"]), "D_4\n");
    assert_eq!(stdout(&["quiver", "classify", "--graph", &fixture("e8_affine.json")]), "affine (E~8)\n");
    assert_eq!(stdout(&["quiver", "coxeter", "--type", "D4"]), golden("coxeter_D4.txt"));
    assert!(stdout(&["quiver", "coxeter", "--type", "A2"]).starts_with("A_2: order 3"));
    let ind = stdout(&["quiver", "indecomposables", "--type", "D4"]);
    assert!(ind.starts_with("12 indecomposables\n"), "{ind}");
    assert_eq!(stdout(&["quiver", "decompose", &fixture("a3_sum.json")]), "(1,1,0) + (1,1,1)\n");
}

#[test]
fn roundtrip_files() {
    let s4 = stdout(&["--json", "chartab", "show", "S4"]);
    let path = scratch("s4.json", &s4);
    assert_eq!(stdout(&["roundtrip", path.to_str().unwrap()]), "true (character table)\n");
    assert_eq!(stdout(&["chartab", "show", path.to_str().unwrap()]), stdout(&["chartab", "show", "S4"]));
    assert_eq!(stdout(&["roundtrip", &fixture("a3_rep.json")]), "true (quiver representation)\n");
}

#[test]
fn truncated_file_is_a_diagnostic() {
    let s3 = stdout(&["--json", "chartab", "show", "S3"]);
    let path = scratch("s3_cut.json", &s3[..s3.len() / 2]);
    let out = repkit(&["roundtrip", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: ") && err.contains("line "), "{err}");
}

#[test]
fn verify_failure_exits_one() {
    let mut table: serde_json::Value = serde_json::from_str(&stdout(&["--json", "chartab", "show", "S3"])).unwrap();
    table["rows"][2]["values"][1] = serde_json::json!({"order": 1, "coeffs": ["1/1"]});
    let path = scratch("s3_broken.json", &table.to_string());
    let out = repkit(&["chartab", "verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
    assert!(repkit(&["chartab", "verify", "A5"]).status.success());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(repkit(&["bogus"]).status.code(), Some(2));
    assert_eq!(repkit(&["sn", "char", "--lambda", "2,1"]).status.code(), Some(2));
    assert_eq!(repkit(&["sn", "char", "--lambda", "1,2", "--class", "3"]).status.code(), Some(2));
    assert!(repkit(&["--help"]).status.success());
}

#[test]
fn selftest_single_criterion() {
    let out = stdout(&["selftest", "--only", "10"]);
    assert!(out.starts_with("[PASS] 10 "), "{out}");
    assert!(out.ends_with("1 of 1 criteria pass\n"));
}
