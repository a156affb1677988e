//! End-to-end behaviour of the `homlie` binary: exit statuses, record output,
//! round trips through files, and the selftest harness.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use homlie_kit::cli::{self, STATUS_FAIL, STATUS_MALFORMED, STATUS_NOT_DIAGONAL, STATUS_OK};
use homlie_kit::fixtures;
use homlie_kit::homlie::HomLieAlgebra;
use homlie_kit::io;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn homlie(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).output().expect("binary runs");
    (out.status.code().expect("exited normally"), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_statuses() {
    let (s, out, _) = homlie(&["verify", &fixture("sl2.alg.json")]);
    assert_eq!(s, STATUS_OK);
    assert!(out.lines().all(|l| l.starts_with("PASS")));

    let (s, out, _) = homlie(&["--format", "records", "verify", &fixture("sl2-badphi.alg.json")]);
    assert_eq!(s, STATUS_FAIL);
    let mult = out.lines().find(|l| l.contains("\"multiplicativity\"")).unwrap();
    assert!(mult.contains("\"labels\":[\"e\",\"f\"]"), "{mult}");
    assert!(mult.contains("\"lhs\":[\"1\",\"0\",\"0\"]") && mult.contains("\"rhs\":[\"6\",\"0\",\"0\"]"), "{mult}");
}

#[test]
fn cohomology_of_sl2() {
    let (s, out, _) = homlie(&["cohomology", "--rep", "adjoint", "--k", "1", &fixture("sl2.alg.json")]);
    assert_eq!(s, STATUS_OK);
    assert!(out.starts_with("dim H^1 = 0\n"), "{out}");
    let (s, _, err) = homlie(&["cohomology", "--k", "9", &fixture("sl2.alg.json")]);
    assert_eq!(s, STATUS_MALFORMED, "{err}");
}

#[test]
fn malformed_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "broken.json", "{\n  \"basis\": [\"a\", \"b\"],\n  \"phi\": [[\"1\", \"0\"], [\"0\" \"1\"]]\n}");
    let (s, _, err) = homlie(&["verify", &p]);
    assert_eq!(s, STATUS_MALFORMED);
    assert!(err.contains("broken.json:3:"), "{err}");

    let p = write(dir.path(), "shape.json", r#"{"dim": 2, "bracket": {"0,1": {"7": "1"}}}"#);
    let (s, _, err) = homlie(&["verify", &p]);
    assert_eq!(s, STATUS_MALFORMED);
    assert!(err.contains("$.bracket[\"0,1\"]"), "{err}");

    let (s, _, _) = homlie(&["no-such-verb"]);
    assert_eq!(s, STATUS_MALFORMED);
}

#[test]
fn jordan_block_is_not_diagonal() {
    let (s, _, err) = homlie(&["section", &fixture("jordan.presentation.json")]);
    assert_eq!(s, STATUS_NOT_DIAGONAL, "{err}");
    let (s, _, _) = homlie(&["extract", &fixture("jordan.presentation.json")]);
    assert_eq!(s, STATUS_NOT_DIAGONAL);
}

#[test]
fn invalid_algebra_inputs_are_refused() {
    let (s, out, err) = homlie(&["center", &fixture("sl2-badphi.alg.json")]);
    assert_eq!(s, STATUS_FAIL);
    assert!(err.contains("refusing"), "{err}");
    assert!(out.contains("multiplicativity"));
    let (s, _, _) = homlie(&["der2", &fixture("sl2-badphi.alg.json")]);
    assert_eq!(s, STATUS_FAIL);
}

#[test]
fn extension_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let (s, ext, _) = homlie(&["--format", "records", "extend", &fixture("semidirect-sl2.cocycle.json")]);
    assert_eq!(s, STATUS_OK);
    let ext = write(dir.path(), "ext.json", &ext);
    let (s, back, _) = homlie(&["--format", "records", "extract", &ext]);
    assert_eq!(s, STATUS_OK);
    let original = io::read_with(Path::new(&fixture("semidirect-sl2.cocycle.json")), io::cocycle_of).unwrap();
    let extracted = io::from_str_with(&back, "extracted", io::cocycle_of).unwrap();
    assert_eq!(extracted, original);

    let (s, m, _) = homlie(&["cocycle-to-morphism", &fixture("semidirect-sl2.cocycle.json")]);
    assert_eq!(s, STATUS_OK);
    let m = write(dir.path(), "m.json", &m);
    assert_eq!(homlie(&["check-2morphism", &m]).0, STATUS_OK);
}

#[test]
fn witness_homotopy_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c = fixture("affine-line.cocycle.json");
    let w = fixture("affine-line.witness.json");
    assert_eq!(homlie(&["check-iso", &w, &c, &c]).0, STATUS_OK);
    let (s, h, _) = homlie(&["iso-to-homotopy", &w, &c, &c]);
    assert_eq!(s, STATUS_OK);
    let h = write(dir.path(), "h.json", &h);
    assert_eq!(homlie(&["check-homotopy", &h]).0, STATUS_OK);
    let (s, back, _) = homlie(&["--format", "records", "homotopy-to-iso", &h, &c, &c]);
    assert_eq!(s, STATUS_OK);
    assert_eq!(back.trim(), r#"{"phitheta":[["3"]]}"#);
}

#[test]
fn records_are_deterministic() {
    let args = ["--format", "records", "der2", &fixture("heisenberg.alg.json")];
    let a = homlie(&args);
    let b = homlie(&args);
    assert_eq!(a, b);
    let v = io::from_str_with(&a.1, "der2", |n, _| io::homlie2_of(n)).unwrap();
    assert_eq!(
        homlie_kit::io::homlie2_json(&v).to_string() + "\n",
        a.1.replace(&format!(",\"der_basis\":{}", der_basis(&a.1)), "")
    );
}

fn der_basis(line: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    v["der_basis"].to_string()
}

#[test]
fn twist_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let psi = write(dir.path(), "psi.json", r#"{"psi": [["1","0","0"],["0","3","0"],["0","0","1/3"]]}"#);
    let (s, out, _) = homlie(&["--format", "records", "twist", &fixture("sl2.alg.json"), &psi]);
    assert_eq!(s, STATUS_OK);
    let a = io::from_str_with(&out, "twisted", |n, _| io::algebra_of(n)).unwrap();
    assert_eq!(a, fixtures::twisted_sl2(&homlie_kit::exactlin::int(3)));
    let p = write(dir.path(), "t.alg.json", &out);
    assert_eq!(homlie(&["verify", &p]).0, STATUS_OK);
}

#[test]
fn selftest_filter_and_mutated_corpus() {
    let out = cli::run(["homlie", "--format", "records", "selftest", "--filter", "dghla"]);
    assert_eq!(out.status, STATUS_OK, "{}", out.stdout);
    let ids: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(ids.len(), 2);
    assert!(ids.iter().all(|l| l.contains("\"module\":\"dghla\"")));

    let dir = tempfile::tempdir().unwrap();
    let mut bad = HomLieAlgebra::heisenberg();
    bad.set_bracket_raw(1, 0, vec![homlie_kit::exactlin::int(0); 3]);
    write(dir.path(), "lopsided.alg.json", &io::algebra_json(&bad).to_string());
    let out = cli::run(["homlie", "selftest", "--filter", "1", "--corpus", &dir.path().to_string_lossy()]);
    assert_eq!(out.status, STATUS_FAIL);
    assert!(out.stdout.contains("FAIL  criterion  1"), "{}", out.stdout);
    assert!(out.stdout.contains("lopsided.alg.json"), "{}", out.stdout);
}

#[test]
fn every_verb_is_wired() {
    let alg = fixture("heisenberg.alg.json");
    for verb in ["center", "derivations", "inner", "outer", "der-algebra", "der2"] {
        let out = cli::run(["homlie", verb, &alg]);
        assert_eq!(out.status, STATUS_OK, "{verb}: {}", out.stderr);
    }
    let c = fixture("central-plane.cocycle.json");
    for verb in ["check-cocycle", "mc-check", "extend", "cocycle-to-morphism"] {
        let out = cli::run(["homlie", verb, &c]);
        assert_eq!(out.status, STATUS_OK, "{verb}: {}", out.stderr);
    }
    let out = cli::run(["homlie", "dghla-selftest", &fixture("sl2-twisted.alg.json"), &fixture("plane-jordan.alg.json")]);
    assert_eq!(out.status, STATUS_OK, "{}", out.stdout);

    let dir = tempfile::tempdir().unwrap();
    let map = write(dir.path(), "map.json", r#"{"map": [["1","0","0"],["0","2","0"],["0","0","1/2"]]}"#);
    let out = cli::run(["homlie", "morphism", &map, &fixture("sl2-twisted.alg.json"), &fixture("sl2-twisted.alg.json")]);
    assert_eq!(out.status, STATUS_OK, "{}", out.stdout);

    let rep = write(
        dir.path(),
        "rep.json",
        r#"{"algebra": {"basis": ["x"]}, "rho": [[["0","1"],["0","0"]]], "beta": [["1","0"],["0","1"]]}"#,
    );
    assert_eq!(cli::run(["homlie", "rep-check", &rep]).status, STATUS_OK);
    let out = cli::run(["homlie", "cohomology", "--k", "1", "--rep", &rep]);
    assert_eq!(out.status, STATUS_OK, "{}", out.stderr);
}

#[test]
fn derivations_can_report_twist_commuting_members() {
    let out = cli::run(["homlie", "--format", "records", "derivations", "--commuting", &fixture("sl2-twisted.alg.json")]);
    assert_eq!(out.status, STATUS_OK, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let flags = v["commutes_with_twist"].as_array().unwrap();
    assert_eq!(flags.len(), v["dim"].as_u64().unwrap() as usize);
    let text = cli::run(["homlie", "derivations", "--commuting", &fixture("sl2.alg.json")]);
    assert!(text.stdout.contains("commuting with the twist: D0, D1, D2"), "{}", text.stdout);
}
