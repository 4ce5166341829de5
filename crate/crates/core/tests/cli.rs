//! End-to-end behavior of the `leibkit` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leibkit::catalog;
use leibkit::derivation::derivation_basis;
use leibkit::io::{emit_algebra_string, parse_algebra_str};
use serde_json::Value;

fn leibkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibkit")).args(args).output().unwrap()
}

fn leibkit_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibkit")).args(args).env(key, value).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_entry(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let e = catalog::catalog_entry(name).unwrap();
    std::fs::write(&path, emit_algebra_string(&e.algebra)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn ln_generators() -> Vec<String> {
    ["e", "h", "f"].iter().flat_map(|a| (1..5).map(move |t| format!("{a}_{t}"))).collect()
}

#[test]
fn analyze_machine_report_fields() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "example_3_8");
    let o = leibkit(&["analyze", s(&f), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["field"]["type"], "Q");
    assert_eq!(v["der_dim"], 4);
    assert_eq!(v["leib_dim"], 1);
    assert_eq!(v["quotient_center_dim"], 1);
    assert_eq!(v["nilpotency_class"], 3);
    assert_eq!(v["all_inner"], true);
    assert_eq!(v["complete"], false);
    assert_eq!(v["char_simple_verdict"]["status"], "no");
    assert_eq!(v["hol_decomposition"]["sums_to_hol"], true);
    assert_eq!(v["hol_decomposition"]["Z_meet_I_trivial"], true);
}

#[test]
fn analyze_text_and_skip_hol() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "sl2_Q");
    let text = stdout(&leibkit(&["analyze", s(&f)]));
    assert!(text.contains("complete") && text.contains("hol.sums_to_hol"));
    let skipped = stdout(&leibkit(&["analyze", s(&f), "--skip-hol", "--format", "machine"]));
    let v: Value = serde_json::from_str(&skipped).unwrap();
    assert!(v.get("hol_decomposition").is_none());
    assert_eq!(v["semisimple"], true);
    assert_eq!(v["complete"], true);
}

#[test]
fn supplied_radical_resolves_prime_field_flags() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "current_sl2_p5");
    let mut args = vec!["analyze", s(&f), "--skip-hol", "--strict", "--format", "machine"];
    let gens = ln_generators();
    for g in &gens {
        args.extend(["--radical", g.as_str()]);
    }
    let o = leibkit(&args);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["semisimple"], false);
    assert_eq!(v["char_semisimple"], true);
    assert_eq!(v["crad_dim"], 0);

    let bare = leibkit(&["analyze", s(&f), "--skip-hol", "--strict", "--format", "machine"]);
    assert_eq!(bare.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&bare)).unwrap();
    assert!(v["semisimple"].is_null());
}

#[test]
fn enumeration_bound_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "current_sl2_p5");
    let mut args = vec!["analyze", s(&f), "--skip-hol", "--format", "machine"];
    let gens = ln_generators();
    for g in &gens {
        args.extend(["--radical", g.as_str()]);
    }
    // The quotient has 31 lines; a bound of 10 leaves the candidate uncertified.
    let o = leibkit_env(&args, "LEIBKIT_MAX_ENUM", "10");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["semisimple"].is_null() && v["crad_dim"].is_null());
    let mut strict = args.clone();
    strict.push("--strict");
    assert_eq!(leibkit_env(&strict, "LEIBKIT_MAX_ENUM", "10").status.code(), Some(3));
    let o = leibkit_env(&args, "LEIBKIT_MAX_ENUM", "31");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["semisimple"], false);
    let bad = leibkit_env(&["analyze", s(&f), "--skip-hol"], "LEIBKIT_MAX_ENUM", "many");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("LEIBKIT_MAX_ENUM"));
}

#[test]
fn derivations_lists_basis_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "cyclic_nilpotent_3");
    let o = leibkit(&["derivations", s(&f), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 3);
    assert!(basis.iter().any(|d| d["inner_witness"].is_null()));
    let text = stdout(&leibkit(&["derivations", s(&f)]));
    assert!(text.starts_with("der_dim 3\n"));
    assert!(text.contains("outer"));
}

#[test]
fn holomorph_file_is_valid() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "heisenberg");
    let out = dir.path().join("hol.json");
    assert_eq!(leibkit(&["holomorph", s(&f), "-o", s(&out)]).status.code(), Some(0));
    let h = parse_algebra_str(&std::fs::read_to_string(&out).unwrap(), true).unwrap();
    let a = catalog::catalog_entry("heisenberg").unwrap().algebra;
    assert_eq!(h.dim(), a.dim() + derivation_basis(&a).dim());
    assert_eq!(leibkit(&["validate", s(&out)]).status.code(), Some(0));
}

#[test]
fn check_ideal_report() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "example_3_8");
    let o = leibkit(&["check-ideal", s(&f), "-g", "y", "--format", "machine"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // span{y} is not closed; its ideal closure span{y, z} is characteristic.
    assert_eq!(v["span_dim"], 1);
    assert_eq!(v["is_ideal"], false);
    assert_eq!(v["closure_dim"], 2);
    assert_eq!(o.status.code(), Some(1));
    let o = leibkit(&["check-ideal", s(&f), "-g", "y + 2*z", "-g", "z", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["is_characteristic"], true);
    assert_eq!(v["nilpotent"], true);
}

#[test]
fn make_commands_emit_valid_algebras() {
    let cases: [(&[&str], usize); 4] = [
        (&["make", "cyclic", "-n", "4", "-k", "0,0,0"], 4),
        (&["make", "cyclic", "-n", "4", "-k", "1,0,2", "--field", "Fp:7"], 4),
        (&["make", "current", "--base", "sl2", "-p", "3"], 9),
        (&["make", "hemi", "--base", "sl2", "--module", "adjoint"], 6),
    ];
    for (args, dim) in cases {
        let o = leibkit(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let a = parse_algebra_str(&stdout(&o), true).unwrap();
        assert_eq!(a.dim(), dim, "{args:?}");
    }
    let e = catalog::catalog_entry("hemi_sl2_natural").unwrap().algebra;
    let made = stdout(&leibkit(&["make", "hemi", "--base", "sl2", "--module", "natural"]));
    assert_eq!(made, emit_algebra_string(&e));
}

#[test]
fn catalog_listing_and_emit() {
    let listing = stdout(&leibkit(&["catalog"]));
    for e in catalog::catalog() {
        assert!(listing.contains(&e.name), "{}", e.name);
    }
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(leibkit(&["catalog", "--emit", s(dir.path())]).status.code(), Some(0));
    let count = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(count, catalog::catalog().len());
}

#[test]
fn basis_change_preserves_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_entry(dir.path(), "hemi_sl2_natural");
    let out = dir.path().join("changed.json");
    assert_eq!(leibkit(&["basis-change", s(&f), "--seed", "7", "-o", s(&out)]).status.code(), Some(0));
    let before: Value = serde_json::from_str(&stdout(&leibkit(&["analyze", s(&f), "--format", "machine"]))).unwrap();
    let after: Value = serde_json::from_str(&stdout(&leibkit(&["analyze", s(&out), "--format", "machine"]))).unwrap();
    for key in ["der_dim", "leib_dim", "left_center_dim", "quotient_center_dim", "complete", "crad_dim", "hol_decomposition"] {
        assert_eq!(before[key], after[key], "{key}");
    }
}

#[test]
fn input_errors_exit_two_with_message() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("unknown_field.json", r#"{"field":{"type":"R"},"dim":1,"basis":["x"],"products":[]}"#),
        ("dim_mismatch.json", r#"{"field":{"type":"Q"},"dim":2,"basis":["x"],"products":[]}"#),
        ("bad_name.json", r#"{"field":{"type":"Q"},"dim":1,"basis":["x"],"products":[{"left":"x","right":"q","value":{}}]}"#),
        ("bad_scalar.json", r#"{"field":{"type":"Q"},"dim":1,"basis":["x"],"products":[{"left":"x","right":"x","value":{"x":"1/0"}}]}"#),
        ("not_json.json", "dim: 3"),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let o = leibkit(&["validate", s(&path)]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty(), "{name}");
    }
}
