use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn relmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relmon"))
        .args(args)
        .env_remove("RELMON_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn vecspace_bool_passes() {
    let o = relmon(&[
        "check",
        "--builtin",
        "vecspace",
        "--semiring",
        "bool",
        "--max-dim",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn freemonoid_powerset_passes() {
    let o = relmon(&[
        "check",
        "--builtin",
        "freemonoid-powerset",
        "--kappa",
        "2",
        "--max-word",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn broken_composite_exits_one_with_witness() {
    let o = relmon(&["check", &data("broken_cyclic3.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["verdict"], "fail");
    let assoc = doc["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|a| a["id"] == "assoc")
        .unwrap();
    assert_eq!(assoc["verdict"], "fail");
    let inputs = assoc["witness"]["inputs"].as_array().unwrap();
    let names: Vec<&str> = inputs.iter().map(|p| p[0].as_str().unwrap()).collect();
    assert_eq!(names, ["f", "g", "h"]);
    // Every failing triple passes through the redirected composite g1;g1.
    let values: Vec<&str> = inputs.iter().map(|p| p[1].as_str().unwrap()).collect();
    assert!(values.windows(2).any(|w| w == ["g1", "g1"]), "{values:?}");
}

#[test]
fn lawful_presented_file_passes() {
    assert_eq!(
        relmon(&["check", &data("cyclic3.json")]).status.code(),
        Some(0)
    );
}

#[test]
fn unlawful_semiring_file_fails() {
    let o = relmon(&["check", &data("degenerate_semiring.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mul-one fail"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"objects\":").unwrap();
    assert_eq!(
        relmon(&["check", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        relmon(&["check", "--builtin", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(relmon(&["check"]).status.code(), Some(2));
}

#[test]
fn resource_cap_exits_two() {
    let o = Command::new(env!("CARGO_BIN_EXE_relmon"))
        .args(["check", "--builtin", "vecspace", "--max-dim", "3"])
        .env("RELMON_MAX_ENUM", "4")
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn report_tables_match_kleisli_conversion_byte_for_byte() {
    for builtin in ["identity", "freemonoid-powerset"] {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (
            dir.path().join("report.json"),
            dir.path().join("convert.json"),
        );
        let common = ["--builtin", builtin, "--kappa", "2", "--max-word", "2"];
        let mut args = vec![
            "report",
            "--out",
            "/dev/null",
            "--tabulate",
            a.to_str().unwrap(),
        ];
        args.extend(common);
        assert_eq!(relmon(&args).status.code(), Some(0));
        let mut args = vec!["convert", "kleisli-to-d", "--out", b.to_str().unwrap()];
        args.extend(common);
        assert_eq!(relmon(&args).status.code(), Some(0));
        assert_eq!(
            std::fs::read(&a).unwrap(),
            std::fs::read(&b).unwrap(),
            "{builtin}"
        );
    }
}

#[test]
fn conversions_verify() {
    for direction in ["d-to-lift", "lift-to-d", "d-to-kleisli", "kleisli-to-d"] {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("t.json");
        let o = relmon(&[
            "convert",
            direction,
            "--builtin",
            "pointed-lifting",
            "--max-dim",
            "2",
            "--out",
            out.to_str().unwrap(),
            "--verify",
        ]);
        assert_eq!(o.status.code(), Some(0), "{direction}: {}", stdout(&o));
        let tables: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert!(tables["kind"].is_string());
    }
}

#[test]
fn convert_rejects_non_laws() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = relmon(&[
        "convert",
        "d-to-lift",
        "--builtin",
        "powerset",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn kleisli_export_has_matrix_homs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("kl.json");
    let o = relmon(&[
        "export",
        "kleisli",
        "--builtin",
        "vecspace",
        "--semiring",
        "bool",
        "--max-dim",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let objects: Vec<String> = doc["objects"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o.as_str().unwrap().to_string())
        .collect();
    assert_eq!(objects.len(), 3);
    // Objects are the dimensions 0, 1, 2; a Kleisli map n -> m is an m x n
    // boolean matrix, so there are 2^(nm) of them.
    let dims: Vec<usize> = (0..=2).collect();
    let morphisms = doc["morphisms"].as_array().unwrap();
    let total: usize = dims
        .iter()
        .flat_map(|n| dims.iter().map(move |m| 1usize << (n * m)))
        .sum();
    assert_eq!(morphisms.len(), total);
    assert_eq!(doc["composition"].as_array().unwrap().len(), {
        let mut k = 0;
        for a in &dims {
            for b in &dims {
                for c in &dims {
                    k += (1usize << (a * b)) * (1usize << (b * c));
                }
            }
        }
        k
    });
}

#[test]
fn em_export_reimports_identically() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("em.json");
    let o = relmon(&[
        "export",
        "em",
        "--builtin",
        "pointed",
        "--out",
        out.to_str().unwrap(),
        "--verify",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a["id"] == "reimport-matches" && a["verdict"] == "pass"));
}

#[test]
fn report_exits_zero_and_emits_schema() {
    let o = relmon(&["report", "--builtin", "degenerate", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["target"], "degenerate");
    assert_eq!(doc["bounds"]["max_word"], 3);
    assert!(doc["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["id"].is_string()));
}

#[test]
fn d_to_lift_reproduces_the_vecspace_lifting() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (
        dir.path().join("native.json"),
        dir.path().join("converted.json"),
    );
    let common = ["--builtin", "pointed-lifting", "--max-dim", "2"];
    let mut args = vec![
        "report",
        "--out",
        "/dev/null",
        "--tabulate",
        a.to_str().unwrap(),
    ];
    args.extend(common);
    assert_eq!(relmon(&args).status.code(), Some(0));
    let mut args = vec!["convert", "d-to-lift", "--out", b.to_str().unwrap()];
    args.extend(common);
    assert_eq!(relmon(&args).status.code(), Some(0));
    let native: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(native["kind"], "lifting");
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn identity_kleisli_export_is_the_base() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("kl.json");
    let o = relmon(&[
        "export",
        "kleisli",
        "--builtin",
        "identity",
        "--max-dim",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    // Sets of size 0..=2 and all functions between them: m^n per hom.
    let sizes = [0u32, 1, 2];
    let homs: u32 = sizes
        .iter()
        .flat_map(|n| sizes.iter().map(move |m| m.pow(*n)))
        .sum();
    assert_eq!(doc["objects"].as_array().unwrap().len(), 3);
    assert_eq!(doc["morphisms"].as_array().unwrap().len() as u32, homs);
}
