//! Exit-code and artifact checks of the `fracsh` binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fracsh"))
}

fn tmp_out(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("fracsh-cli-{name}"))
}

#[test]
fn symbols_succeeds_and_writes_artifacts() {
    let out = tmp_out("symbols");
    let status = bin()
        .args(["symbols", "--set", "alpha=1.3", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    for file in ["symbols.csv", "symbols.json", "manifest.json"] {
        assert!(out.join(file).exists(), "{file} missing");
    }
    let csv = std::fs::read_to_string(out.join("symbols.csv")).unwrap();
    assert!(csv.starts_with("alpha,xi,sh_symbol,r_plus,m1_plus,m2_plus,defect\n"));
}

#[test]
fn validation_failures_exit_with_code_2() {
    // alpha = 2 is rejected by the symbols study (open interval).
    let status = bin()
        .args(["symbols", "--set", "alpha=2", "--out"])
        .arg(tmp_out("bad-alpha"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));

    // Two epsilon values are not enough for a slope fit.
    let status = bin()
        .args(["residuum", "--set", "eps_list=0.2,0.1", "--out"])
        .arg(tmp_out("short-eps"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));

    // Unknown keys are configuration errors.
    let status = bin()
        .args(["gl", "--set", "bogus=1", "--out"])
        .arg(tmp_out("bogus"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn numeric_failures_exit_with_code_3() {
    // gamma = -3 with the 0.8 sech amplitude escapes before T* = 1.
    let status = bin()
        .args(["gl", "--set", "a1=1", "--set", "a2=1", "--out"])
        .arg(tmp_out("blowup"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
}

#[test]
fn config_file_and_overrides_compose() {
    let dir = tmp_out("config-file");
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("study.conf");
    std::fs::write(&conf, "alpha = 1.3\nsamples = 3\n# comment line\n").unwrap();
    let out = dir.join("out");
    let status = bin()
        .args(["gl", "--config"])
        .arg(&conf)
        .args(["--set", "samples=5", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = std::fs::read_to_string(out.join("gl.csv")).unwrap();
    // 5 samples on 256 slow modes, plus the header.
    assert_eq!(csv.lines().count(), 1 + 5 * 256);
    let manifest = std::fs::read_to_string(out.join("manifest.json")).unwrap();
    assert!(manifest.contains("\"alpha\": 1.3"));
}
