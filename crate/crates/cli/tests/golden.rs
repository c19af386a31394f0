use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a stored file; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        fs::write(&path, actual).expect("write golden file");
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if actual != expected {
        for (i, (a, b)) in actual.lines().zip(expected.lines()).enumerate() {
            if a != b {
                panic!("{name} differs at line {}:\n  expected: {b}\n  actual:   {a}", i + 1);
            }
        }
        panic!("{name}: outputs differ in length");
    }
}

fn run(args: &[&str]) -> String {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let args: Vec<String> = args.iter().map(|a| a.replace("@", data.to_str().unwrap())).collect();
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgen")).args(&args).output().expect("binary runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn report_all_taft3_seed7() {
    assert_golden("report_all_taft3_seed7.json", &run(&["report-all", "--input", "@/taft3.json", "--seed", "7"]));
}

#[test]
fn generic_base_sweedler() {
    assert_golden("generic_base_sweedler.json", &run(&["generic-base", "--input", "@/sweedler.json"]));
}

#[test]
fn lattice_s3_text() {
    assert_golden("lattice_s3.txt", &run(&["lattice", "--group", "S3", "--text"]));
}

#[test]
fn noether_klein4() {
    assert_golden("noether_v4.json", &run(&["noether", "--group", "V4", "--max-degree", "4"]));
}
