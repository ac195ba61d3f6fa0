//! End-to-end tests of the binary: exit-code contract, emitted files, and
//! byte-identical reruns.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shiftroof"))
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn entropy_on_golden_mean() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "entropy",
        "--input",
        &fixture("golden_mean.toml"),
        "--n-max",
        "20",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("4.8121182505960347e-1"), "{stdout}");
    for name in ["language.csv", "components.csv", "spectral.json"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    let language = fs::read_to_string(dir.path().join("language.csv")).unwrap();
    assert!(language.starts_with("n,count,log_count,ratio_to_lambda_n\n"));
    // golden mean counts 2, 3, 5, 8 in the exact column
    assert!(language.contains("\n1,2,"));
    assert!(language.contains("\n4,8,"));
}

#[test]
fn verify_passes_on_fixtures() {
    for name in [
        "golden_mean.toml",
        "two_component.toml",
        "no_triple_ones.toml",
    ] {
        let dir = tempfile::tempdir().unwrap();
        let out = run(&[
            "verify",
            "--input",
            &fixture(name),
            "--n-max",
            "30",
            "--r-max",
            "60",
            "--oracle",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert!(out.status.success(), "{name}: {stdout}");
        assert!(!stdout.contains("FAIL"), "{name}: {stdout}");
        for file in [
            "aj_table.csv",
            "q_table.csv",
            "partition.csv",
            "root_trace.csv",
            "roof_manifest.json",
        ] {
            assert!(dir.path().join(file).exists(), "{name}: {file} missing");
        }
        // no stale temporaries after the rename
        for entry in fs::read_dir(dir.path()).unwrap() {
            let path = entry.unwrap().path();
            assert!(!path.to_string_lossy().ends_with(".tmp"));
        }
    }
}

#[test]
fn report_multiplicities() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "report",
        "--input",
        &fixture("two_component.toml"),
        "--n-max",
        "30",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("multiplicity = 2"), "{stdout}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["model"]["multiplicity"], 2);
    assert_eq!(report["measures"]["rows"][0]["lifted_entropy"], 1.0);

    let dir2 = tempfile::tempdir().unwrap();
    let out2 = run(&[
        "report",
        "--input",
        &fixture("mixed_entropy.toml"),
        "--n-max",
        "30",
        "--out",
        dir2.path().to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    let stdout2 = String::from_utf8(out2.stdout).unwrap();
    assert!(stdout2.contains("multiplicity = 1"), "{stdout2}");
}

#[test]
fn exit_code_contract() {
    // malformed file -> 2 with a line-numbered diagnostic
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "alphabet_size = [oops\n").unwrap();
    let out = run(&["entropy", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 1"), "{stderr}");

    // empty shift -> 3
    let empty = dir.path().join("empty.toml");
    fs::write(&empty, "alphabet_size = 2\nmatrix = [[0, 1], [0, 0]]\n").unwrap();
    let out = run(&["entropy", "--input", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // zero entropy -> 4 for verify and report
    for cmd in ["verify", "report"] {
        let out = run(&[cmd, "--input", &fixture("fixed_point.toml")]);
        assert_eq!(out.status.code(), Some(4), "{cmd}");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert!(stderr.contains("zero entropy"), "{stderr}");
    }

    // roof constant below the admissible minimum -> 2
    let out = run(&[
        "verify",
        "--input",
        &fixture("golden_mean.toml"),
        "--c",
        "1.0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let out = run(&[
            "verify",
            "--input",
            &fixture("golden_mean.toml"),
            "--n-max",
            "25",
            "--r-max",
            "40",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for file in [
        "aj_table.csv",
        "q_table.csv",
        "partition.csv",
        "root_trace.csv",
        "roof_manifest.json",
    ] {
        let a = fs::read(dir_a.path().join(file)).unwrap();
        let b = fs::read(dir_b.path().join(file)).unwrap();
        assert_eq!(a, b, "{file} differs between runs");
    }
}

#[test]
fn lemma_subcommand_echoes_both_sides() {
    let out = run(&["lemma", "--n", "3", "--k", "2", "--values", "1,2,3,4,5,6,7"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("n,k,lhs,rhs,holds\n"), "{stdout}");
    // additive sequence: lhs = 3 (1 + 2) + 2 * 3 = 15, rhs = 3 * b_5 = 15
    assert!(stdout.contains("3,2,1.5000000000000000e1,1.5000000000000000e1,true"));

    // a sequence that is not sub-additive is rejected as a definition error
    let out = run(&["lemma", "--n", "1", "--k", "1", "--values", "1,3"]);
    assert_eq!(out.status.code(), Some(1));
}
