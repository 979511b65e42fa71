use oqkit_cli::run_cli_with;
use std::path::{Path, PathBuf};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("oqkit").chain(args.iter().copied());
    let code = run_cli_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn tmp(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["check", &data("mo2_qca.json")]).0, 0);
    let (code, out, _) = run(&["check", &data("o6_as_oml.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("oml at (a, b)"), "{out}");
    let (code, _, err) = run(&["convert", "--to", "qia", "missing.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("missing.json"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["convert", "--to", "lattice", &data("mo2_qca.json")]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn invalid_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = tmp(dir.path(), "bad.json");
    let text = std::fs::read_to_string(data("b2_qca.json")).unwrap().replace("\"ocomp\": [3, 2, 1, 0]", "\"ocomp\": [3, 2, 1, 9]");
    std::fs::write(&bad, text).unwrap();
    let (code, _, err) = run(&["check", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("ocomp"), "{err}");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["check", &bad]).0, 2);
}

#[test]
fn convert_to_file_and_back() {
    let dir = tempfile::tempdir().unwrap();
    let (q, back) = (tmp(dir.path(), "q.json"), tmp(dir.path(), "back.json"));
    assert_eq!(run(&["convert", "--to", "qia", &data("b2_qca.json"), "-o", &q]).0, 0);
    assert_eq!(run(&["check", &q]).0, 0);
    assert_eq!(run(&["convert", "--to", "qca", &q, "-o", &back]).0, 0);
    assert_eq!(std::fs::read(&back).unwrap(), std::fs::read(data("b2_qca.json")).unwrap());
    // wrong direction for the kind
    assert_eq!(run(&["convert", "--to", "qca", &data("b2_qca.json")]).0, 2);
}

#[test]
fn converting_a_non_orthomodular_lattice_reports() {
    let (code, out, _) = run(&["convert", "--to", "qia", &data("o6_as_oml.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("check_orthomodular: FAIL"));
}

#[test]
fn roundtrip_command() {
    for f in ["b2_qca.json", "cylset_2_2_qca.json", "mo2_cqia.json", "mo2_oml.json"] {
        let (code, out, _) = run(&["roundtrip", &data(f)]);
        assert_eq!(code, 0, "{f}");
        assert!(out.contains("identical"));
    }
}

#[test]
fn frame_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let (json, dot) = (tmp(dir.path(), "f.json"), tmp(dir.path(), "f.dot"));
    let args = ["frame", "--kind", "maclaren", &data("b2_qca.json"), "-o", &json, "--dot", &dot, "--delta", "0,1"];
    let (code, _, err) = run(&args);
    assert_eq!(code, 0);
    assert!(err.contains("check_cylindric_orthoframe: pass"));
    assert_eq!(std::fs::read(&json).unwrap(), std::fs::read(data("b2_maclaren_frame.json")).unwrap());
    let first = std::fs::read(&dot).unwrap();
    run(&args);
    assert_eq!(std::fs::read(&dot).unwrap(), first);
    assert_eq!(run(&["check", &json]).0, 0);
    let (code, out, _) = run(&["frame", "--kind", "goldblatt", &data("cylset_2_2_qca.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("\"kind\": \"frame\""));
    assert_eq!(run(&["frame", "--kind", "maclaren", &data("b2_qca.json"), "--delta", "0,5"]).0, 2);
    assert_eq!(run(&["frame", "--kind", "maclaren", &data("mo2_oml.json")]).0, 2);
}

#[test]
fn filters_command() {
    let (code, out, _) = run(&["filters", &data("b2_qca.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "{1}\n{a,1}\n{b,1}\n");
    assert_eq!(run(&["filters", &data("cylset_2_2_qca.json")]).1.lines().count(), 15);
}

#[test]
fn catalog_command() {
    let (code, out, _) = run(&["catalog", "simple:mo:2:2"]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(data("mo2_qca.json")).unwrap());
    assert!(run(&["catalog", "o6"]).1.contains("\"kind\": \"ol\""));
    assert_eq!(run(&["catalog", "nonsense"]).0, 2);
    assert_eq!(run(&["catalog", "cylset:4:4"]).0, 2);
}

#[test]
fn report_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = tmp(dir.path(), "r.json");
    assert_eq!(run(&["report", "--json", &path, &data("o6_as_oml.json")]).0, 1);
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.contains("\"input_digest\": \"sha256:"));
    assert!(first.contains("\"witness\": [\"a\", \"b\"]"), "{first}");
    assert!(first.contains("\"passed\": false"));
    run(&["report", "--json", &path, &data("o6_as_oml.json")]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    assert_eq!(run(&["report", "--json", &path, &data("cylset_2_2_qca.json")]).0, 0);
}

#[test]
fn env_var_lowers_caps() {
    let bin = env!("CARGO_BIN_EXE_oqkit");
    let run_env = |args: &[&str]| {
        std::process::Command::new(bin).args(args).env("OQKIT_MAX_ELEMS", "8").output().unwrap()
    };
    let out = run_env(&["catalog", "cylset:2:2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("8"));
    assert_eq!(run_env(&["filters", &data("cylset_2_2_qca.json")]).status.code(), Some(2));
    assert_eq!(run_env(&["filters", &data("b2_qca.json")]).status.code(), Some(0));
}
