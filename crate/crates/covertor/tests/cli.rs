//! End-to-end checks of the command-line interface.

use std::process::Command;

fn covertor() -> Command {
    Command::new(env!("CARGO_BIN_EXE_covertor"))
}

fn write_input(dir: &tempfile::TempDir, name: &str, body: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn compute_trefoil_prints_order() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "trefoil.json", r#"{"braid": "braid 2: 1 1 1"}"#);
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "2", "--meridians", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("|H1| = 3"), "stdout: {stdout}");
}

#[test]
fn oracle_flag_reports_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "trefoil.json", r#"{"braid": "braid 2: 1 1 1"}"#);
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "3", "--meridians", "1", "--oracle"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("|H1| = 4"), "stdout: {stdout}");
    assert!(stdout.contains("oracle: 4 (agrees)"), "stdout: {stdout}");
}

#[test]
fn group_and_meridians_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        &dir,
        "hopf.json",
        r#"{"braid": {"strands": 2, "word": [1, 1]}, "group": [2, 2], "meridians": [[1, 0], [0, 1]]}"#,
    );
    let out = covertor().arg("compute").arg(&input).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("|H1| = 1"), "stdout: {stdout}");
}

#[test]
fn malformed_braid_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "bad.json", r#"{"braid": "braid 2: 7"}"#);
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "2", "--meridians", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("error"), "stderr: {stderr}");

    let missing = dir.path().join("nope.json");
    let out = covertor()
        .arg("compute")
        .arg(&missing)
        .args(["--group", "2", "--meridians", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strict_mode_signals_infinite_homology() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "trefoil.json", r#"{"braid": "braid 2: 1 1 1"}"#);
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "6", "--meridians", "1", "--strict"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("|H1| = 0 (infinite)"), "stdout: {stdout}");
}

#[test]
fn table_report_shows_characters_and_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "trefoil.json", r#"{"braid": "braid 2: 1 1 1"}"#);
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "4", "--meridians", "1", "--report", "table"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("sublink {1}: 1 - t1 + t1^2"), "{stdout}");
    assert!(stdout.contains("homology sphere: yes"), "{stdout}");
    // one row per character
    assert_eq!(stdout.matches("\n[").count(), 4, "{stdout}");
}

#[test]
fn json_report_is_valid_json() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "trefoil.json", r#"{"braid": "braid 2: 1 1 1"}"#);
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "3", "--meridians", "1", "--report", "json", "--oracle"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json_start = stdout.find('{').unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout[json_start..]).unwrap();
    assert_eq!(value["order"], "4");
    assert_eq!(value["homology_sphere"], true);
    assert_eq!(value["oracle"]["order"], "4");
    assert_eq!(value["characters"].as_array().unwrap().len(), 3);
}

#[test]
fn polynomial_table_input_with_consistency_warning() {
    let dir = tempfile::tempdir().unwrap();
    // table-only input for the trefoil
    let table_only = write_input(
        &dir,
        "table.json",
        r#"{"alexander": {"1": "t1^2 - t1 + 1"}, "group": [2], "meridians": [[1]]}"#,
    );
    let out = covertor().arg("compute").arg(&table_only).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("|H1| = 3"));

    // diagram plus a deliberately different table: the table wins and a
    // warning lands on stderr
    let both = write_input(
        &dir,
        "both.json",
        r#"{"braid": "braid 2: 1 1 1", "alexander": {"1": "t1^2 - 3*t1 + 1"}, "group": [2], "meridians": [[1]]}"#,
    );
    let out = covertor().arg("compute").arg(&both).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stdout.contains("|H1| = 5"), "table value wins: {stdout}");
    assert!(stderr.contains("warning"), "stderr: {stderr}");
}

#[test]
fn summand_groups_normalize() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(&dir, "trefoil.json", r#"{"braid": "braid 2: 1 1 1"}"#);
    // Z/2 + Z/3 with image (1,1) is the Z/6 cover
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "2,3", "--meridians", "1,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("|H1| = 0 (infinite)"));
    // (1,0) generates only the Z/2 factor
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--group", "2,3", "--meridians", "1,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn higher_dim_command() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        &dir,
        "higher.json",
        r#"{"invariants": ["t1^2 - t1 + 1"]}"#,
    );
    let out = covertor()
        .arg("higher-dim")
        .arg(&input)
        .args(["--degree", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("product = 3"), "stdout: {stdout}");

    let vanishing = write_input(
        &dir,
        "vanishing.json",
        r#"{"invariants": ["t1 - 1"]}"#,
    );
    let out = covertor()
        .arg("higher-dim")
        .arg(&vanishing)
        .args(["--degree", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.contains("not a rational homology sphere"),
        "stdout: {stdout}"
    );
}

#[test]
fn certificate_failure_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    // an inconsistent user table: the trefoil diagram with a constant-2
    // "polynomial" makes the formula value disagree with the oracle
    let input = write_input(
        &dir,
        "lying.json",
        r#"{"braid": "braid 2: 1 1 1", "alexander": {"1": "2"}, "group": [2], "meridians": [[1]]}"#,
    );
    let out = covertor()
        .arg("compute")
        .arg(&input)
        .args(["--oracle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("disagrees"), "stderr: {stderr}");
}
