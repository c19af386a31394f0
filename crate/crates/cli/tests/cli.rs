use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfgen::TAG_REGISTRY;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn hopfgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfgen")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = hopfgen(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}); stderr: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check named {name}"))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sweedler_generic_base() {
    let input = data("sweedler.json");
    let (code, r) = run_json(&["generic-base", "--input", path_str(&input)]);
    assert_eq!(code, 0);
    let p = &r["artifacts"]["presentation"];
    assert_eq!(p["ell"], 2);
    assert_eq!(p["n"], 4);
    assert_eq!(p["degree_bound"], 2);
    let laurent: Vec<&str> =
        p["laurent_generators"].as_array().unwrap().iter().map(|g| g["monomial"].as_str().unwrap()).collect();
    assert_eq!(laurent, ["t_1", "t_g^2"]);
    let poly: Vec<&str> =
        p["polynomial_generators"].as_array().unwrap().iter().map(|g| g["monomial"].as_str().unwrap()).collect();
    assert_eq!(poly, ["t_g*t_v", "t_gv"]);
}

#[test]
fn corrupted_coproduct_is_rejected() {
    let input = data("corrupted.json");
    let (code, r) = run_json(&["check-hopf", "--input", path_str(&input)]);
    assert_eq!(code, 1);
    let c = check(&r, "coassociativity");
    assert_eq!(c["passed"], false);
    assert!(c["witness"].as_str().unwrap().starts_with("v "));
    assert_eq!(check(&r, "associativity")["passed"], true);
}

#[test]
fn reports_are_deterministic() {
    let input = data("taft3.json");
    let args = ["report-all", "--input", path_str(&input), "--seed", "7"];
    let a = hopfgen(&args);
    let b = hopfgen(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = hopfgen(&["report-all", "--input", path_str(&input), "--seed", "8"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn emitted_tags_are_registered() {
    let sweedler = data("sweedler.json");
    let taft3 = data("taft3.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["report-all", "--input", path_str(&sweedler)],
        vec!["report-all", "--input", path_str(&taft3)],
        vec!["pi-identity", "--input", path_str(&sweedler)],
        vec!["lattice", "--group", "D4"],
        vec!["dedekind", "--group", "S3"],
        vec!["dedekind", "--input", path_str(&sweedler)],
        vec!["noether", "--group", "Z4"],
        vec!["iyer-check", "--group", "Z3", "--max-degree", "3"],
    ];
    for args in runs {
        let (code, r) = run_json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(r["report_version"], 1);
        for c in r["checks"].as_array().unwrap() {
            let tag = c["tag"].as_str().unwrap();
            assert!(TAG_REGISTRY.iter().any(|(t, _)| *t == tag), "{tag}");
        }
    }
}

#[test]
fn malformed_input_reports_position() {
    let dir = std::env::temp_dir().join(format!("hopfgen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"name\": \"x\",\n  \"basis\": 3\n}").unwrap();
    let out = hopfgen(&["check-hopf", "--input", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json:3:"), "{err}");

    let text = std::fs::read_to_string(data("sweedler.json"))
        .unwrap()
        .replace("[\"g\",\"g\",\"1\",\"1\"]", "[\"g\",\"h\",\"1\",\"1\"]");
    let wrong_label = dir.join("label.json");
    std::fs::write(&wrong_label, text).unwrap();
    let out = hopfgen(&["check-hopf", "--input", path_str(&wrong_label)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("mul[5][1]") && err.contains("`h`"), "{err}");
}

#[test]
fn size_limits_surface_verbatim() {
    let out = hopfgen(&["noether", "--group", "S3", "--max-degree", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the configured limit"));
}

#[test]
fn explicit_retraction_is_certified() {
    let dir = std::env::temp_dir().join(format!("hopfgen-gamma-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let gamma = dir.join("gamma.json");
    std::fs::write(&gamma, r#"{"v": {"1": "1", "g": "-1"}}"#).unwrap();
    let input = data("sweedler.json");
    let (code, r) = run_json(&["generic-base", "--input", path_str(&input), "--gamma", path_str(&gamma)]);
    assert_eq!(code, 1);
    assert_eq!(check(&r, "coalgebra_map")["passed"], true);
    assert_eq!(check(&r, "right_module_map")["passed"], false);
}

#[test]
fn data_files_match_builtins() {
    for (name, file) in [("sweedler", "sweedler.json"), ("taft3", "taft3.json")] {
        let out = hopfgen(&["emit-builtin", name]);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(data(file)).unwrap());
    }
}

#[test]
fn text_table_lists_every_check() {
    let input = data("sweedler.json");
    let out = hopfgen(&["check-hopf", "--input", path_str(&input), "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    assert!(text.ends_with("10/10 checks passed\n"));
}
