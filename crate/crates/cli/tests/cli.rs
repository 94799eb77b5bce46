use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gaussmap"))
}

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn gaussmap")
}

fn run_spec(cmd: &str, file: &str, rest: &[&str]) -> Output {
    let path = spec(file);
    let mut args = vec![cmd, "--spec", path.to_str().unwrap()];
    args.extend_from_slice(rest);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn hilbert_table_matches_series() {
    let o = run_spec("hilbert", "sextic.json", &["--from", "0", "--to", "8", "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "6,27,27,true"), "{text}");
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));

    let o = run_spec("hilbert", "elliptic-quartic.json", &["--to", "4", "--csv"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("2,8,")));

    let o = run_spec("hilbert", "sextic.json", &["--from", "3", "--to", "2", "--csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn gauss_on_projective_plane() {
    let o = run(&["gauss", "--pn", "2", "-e", "1", "-a", "1", "-b", "2", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["rank"], 8);
    assert_eq!(v["surjective"], true);
    assert_eq!(v["context"], "projective-space");
}

#[test]
fn gauss_on_sextic() {
    let o = run_spec("gauss", "sextic.json", &["-e", "1", "-a", "1", "-b", "2", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["rank"].clone(), v["coker_dim"].clone()), (Value::from(8), Value::from(19)));
    assert_eq!(v["surjective"], false);
}

#[test]
fn equal_weights_kill_diagonal_columns() {
    let o = run_spec("gauss", "sextic.json", &["-e", "1", "-a", "3", "-b", "3", "--json", "--dump-matrix"]);
    assert!(o.status.success());
    let v = json(&o);
    let dom = v["domain_dim"].as_u64().unwrap() as usize;
    let side = (dom as f64).sqrt() as usize;
    assert_eq!(side * side, dom);
    let entries = v["matrix"].as_array().unwrap();
    assert!(!entries.is_empty());
    for j in 0..side {
        let diag = j * side + j;
        assert!(entries.iter().all(|m| m["col"].as_u64().unwrap() as usize != diag));
    }
}

#[test]
fn json_reports_reparse_and_rerun_identically() {
    let args = ["-e", "1", "-a", "1", "-b", "2", "--json"];
    let a = run_spec("gauss", "elliptic-quartic.json", &args);
    let b = run_spec("gauss", "elliptic-quartic.json", &args);
    assert_eq!(a.stdout, b.stdout);
    let report: gaussmap::gaussmaps::GaussMapReport = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report.rank, 12);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", stdout(&a));

    let v1 = run(&["verify", "theorem34", "--json"]);
    let v2 = run(&["verify", "theorem34", "--json"]);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn tangent_command() {
    let o = run_spec("tangent", "sextic.json", &["--h", "3", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["witnesses"]["coker_dim"], 19);
    assert_eq!(v["verdict"], "PASS");

    let o = run_spec("tangent", "quintic.json", &["--h", "2", "--json"]);
    assert_eq!(json(&o)["witnesses"]["coker_dim"], 12);

    let o = run_spec("tangent", "sextic.json", &["--h", "2"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "theorem34", "--g", "10", "--h", "3", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v[0]["verdict"], "PASS");
    assert_eq!(v[0]["witnesses"]["codim"], 3);

    let o = run(&["verify", "lemma1", "--n", "2", "--e", "1", "--max-t", "5", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert!(v.as_array().unwrap().iter().all(|r| r["verdict"] == "PASS"));

    let o = run(&["verify", "nonsense"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_accepts_extra_specs() {
    let path = spec("quintic.json");
    let o = run(&["verify", "tangent", "--spec", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["instance"], "plane quintic h=2");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{ "n": 2, "degrees": [6], "forms": ["X0^6 + X9"] }"#).unwrap();
    let o = run(&["gauss", "--spec", bad.to_str().unwrap(), "-a", "1", "-b", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("forms[0]"));

    let dependent = dir.path().join("dependent.json");
    std::fs::write(&dependent, r#"{ "n": 3, "degrees": [2, 2], "forms": ["X0^2 + X1^2", "2*X0^2 + 2*X1^2"] }"#).unwrap();
    let o = run(&["hilbert", "--spec", dependent.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));

    let surface = dir.path().join("surface.json");
    std::fs::write(&surface, r#"{ "n": 3, "degrees": [3], "forms": "fermat" }"#).unwrap();
    let o = run(&["gauss", "--spec", surface.to_str().unwrap(), "-a", "1", "-b", "1"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["gauss", "--spec", surface.to_str().unwrap(), "-a", "1", "-b", "1", "--allow-lower-bound", "--json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["context"], "variety");
}

#[test]
fn random_spec_seed_override() {
    let path = spec("canonical-genus5.json");
    let a = run(&["hilbert", "--spec", path.to_str().unwrap(), "--to", "3", "--csv"]);
    let b = run(&["hilbert", "--spec", path.to_str().unwrap(), "--to", "3", "--csv", "--seed", "11"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}
