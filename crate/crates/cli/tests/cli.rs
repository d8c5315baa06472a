//! End-to-end runs of the command-line binary.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pluckertree"))
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_dataset(dir: &Path, name: &str) -> PathBuf {
    let ds = pluckertree::generators::dataset(name).unwrap();
    let path = dir.join(format!("{name}.fct"));
    std::fs::write(&path, &ds.text).unwrap();
    path
}

#[test]
fn check_reports_orientable_sphere() {
    let dir = tmpdir("check");
    let path = write_dataset(&dir, "example-1.1");
    let out = bin().arg("check").arg(&path).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}");
    assert!(stdout.contains("closed orientable"), "{stdout}");
    assert!(stdout.contains("8, 27, 38, 19"), "{stdout}");
}

#[test]
fn check_rejects_book_complex() {
    let dir = tmpdir("check-book");
    let path = dir.join("book.fct");
    std::fs::write(&path, "0 1 2\n0 1 3\n0 1 4\n").unwrap();
    let out = bin().arg("check").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("not a pseudomanifold"), "{stdout}");
}

#[test]
fn orient_prints_signed_facets() {
    let dir = tmpdir("orient");
    let path = dir.join("tetra.fct");
    std::fs::write(&path, "0 1 2\n0 1 3\n0 2 3\n1 2 3\n").unwrap();
    let out = bin().arg("orient").arg(&path).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout, "+ 0 1 2\n- 0 1 3\n+ 0 2 3\n- 1 2 3\n");
}

#[test]
fn relations_counts_admissible_stream() {
    let dir = tmpdir("relations");
    let path = write_dataset(&dir, "example-1.1");
    let out = bin().arg("relations").arg(&path).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("500 admissible signed relations"), "{stdout}");
}

#[test]
fn search_verify_eval_round_trip() {
    let dir = tmpdir("roundtrip");
    let path = write_dataset(&dir, "example-1.1");
    let cert = dir.join("example.cert.json");
    let out = bin()
        .arg("search")
        .arg(&path)
        .args(["--max-size", "2", "--time-limit", "60", "--output"])
        .arg(&cert)
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}");
    assert!(stdout.contains("verification: all checks pass"), "{stdout}");

    let out = bin().arg("verify").arg(&path).arg(&cert).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}");
    assert!(stdout.contains("certificate valid"), "{stdout}");
    for check in ["complex", "orientation", "tree", "elimination", "positivity", "identity", "vanishing"] {
        assert!(stdout.contains(&format!("[pass] {check}")), "{check}: {stdout}");
    }

    let out = bin().arg("eval").arg(&path).arg(&cert).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("exactly zero"));

    // Byte-stable output for identical seed and limits.
    let cert2 = dir.join("example2.cert.json");
    let out = bin()
        .arg("search")
        .arg(&path)
        .args(["--max-size", "2", "--time-limit", "60", "--output"])
        .arg(&cert2)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        std::fs::read(&cert).unwrap(),
        std::fs::read(&cert2).unwrap(),
        "certificate files differ across identical runs"
    );

    // The certificate does not verify against a different complex.
    let other = write_dataset(&dir, "zheng-Z");
    let out = bin().arg("verify").arg(&other).arg(&cert).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_on_control_reports_no_certificate() {
    let dir = tmpdir("control");
    let path = write_dataset(&dir, "cross-polytope-4");
    let out = bin()
        .arg("search")
        .arg(&path)
        .args(["--max-size", "3", "--time-limit", "60"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("no certificate"), "{stdout}");
}

#[test]
fn generate_writes_catalog() {
    let dir = tmpdir("generate");
    let out = bin()
        .arg("generate")
        .arg("--dir")
        .arg(&dir)
        .args(["--novik-zheng", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("example-1.1.fct").exists());
    assert!(dir.join("jockusch-d3-6.fct").exists());
    assert!(dir.join("forbidden-jockusch-d3-6.fct").exists());
    assert!(dir.join("novik-zheng-d4-6.fct").exists());
    // Generated datasets parse and validate through `check`.
    let out = bin()
        .arg("check")
        .arg(dir.join("novik-zheng-d4-6.fct"))
        .output()
        .unwrap();
    assert!(out.status.success());
}
