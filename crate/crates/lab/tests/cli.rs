use std::path::Path;
use std::process::{Command, Output};

fn calab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_calab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn exit_codes_distinguish_pass_fail_and_error() {
    assert_eq!(calab(&["commute", "--s", "4", "--left", "mu:2", "--right", "sigma"]).status.code(), Some(0));
    assert_eq!(calab(&["commute", "--s", "4", "--left", "mirror", "--right", "zero"]).status.code(), Some(1));
    assert_eq!(calab(&["witness-plambda", "--s", "7"]).status.code(), Some(2));
    assert_eq!(calab(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn mu_prints_a_ca1_table() {
    let out = calab(&["mu", "--s", "4", "--u", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let map: calab_core::ca1d::BlockMap = text.parse().unwrap();
    assert_eq!(map, calab_core::mulca::mu_p(calab_core::symcore::Alphabet::new(4).unwrap(), 2).unwrap());
}

#[test]
fn flags_override_config_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "pm.cfg", "p=2\nm=2\nsteps=10\nprefix=200\n");
    let from_file: serde_json::Value = serde_json::from_str(&stdout(&calab(&["witness-pm", "--config", &cfg]))).unwrap();
    assert_eq!(from_file["steps"], 10);
    let overridden: serde_json::Value =
        serde_json::from_str(&stdout(&calab(&["witness-pm", "--config", &cfg, "--steps", "20"]))).unwrap();
    assert_eq!(overridden["steps"], 20);
    assert_eq!(overridden["prefix_len"], 200);
}

#[test]
fn csv_output_has_a_header_row() {
    let out = calab(&["witness-plambda", "--format", "csv", "--trials", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("s,p,trials,seed,passed"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn reports_are_byte_identical_and_sequential_agrees() {
    let args = ["coverage", "--s", "4", "--gens", "mu:2 sigma", "--seq", "gen=thue-morse", "--k", "2", "--depth", "3"];
    let a = calab(&args);
    let b = calab(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let mut seq = vec!["--sequential"];
    seq.extend_from_slice(&args);
    assert_eq!(calab(&seq).stdout, a.stdout);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = calab(&["lacunary", "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert!(report.is_object());
}

#[test]
fn enumeration_cap_comes_from_the_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_calab"))
            .args(["commutant", "--s", "2", "--gens", "sigma", "--radius", "2"])
            .env("CALAB_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("100").status.code(), Some(2));
    assert_eq!(run("1000").status.code(), Some(0));
    assert_eq!(run("lots").status.code(), Some(2));
}
