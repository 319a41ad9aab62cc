//! End-to-end checks of the `cubic-tcf` binary: subcommand output, the JSON
//! schemas, the exit-code contract (0 success, 1 domain error, 2 usage) and
//! byte-level determinism.

use assert_cmd::Command;
use predicates::prelude::*;

fn bin() -> Command {
    Command::cargo_bin("cubic-tcf").expect("binary builds")
}

#[test]
fn help_succeeds() {
    bin()
        .arg("--help")
        .assert()
        .success()
        .stdout(predicate::str::contains("expand"));
}

#[test]
fn expand_example1_json() {
    let out = bin()
        .args(["expand", "--poly", "x^3-5x^2+x-3", "--z", "5", "--json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["pipeline"], "dominant");
    assert_eq!(v["z"], "5");
    assert_eq!(v["k"], serde_json::Value::Null);
    assert_eq!(v["tcf"]["pre_period"][0][0], "5");
    assert_eq!(v["tcf"]["pre_period"][1][0], "-17");
    assert_eq!(v["tcf"]["period"][0][0], "-19/141");
    assert_eq!(v["tcf"]["period"][1][1], "46/47");
    assert_eq!(v["couple"][0], "3/alpha");
}

#[test]
fn expand_smallest_root_section4() {
    let out = bin()
        .args([
            "expand",
            "--poly",
            "x^3-2x^2+x+1",
            "--root",
            "smallest",
            "--z",
            "5",
            "--json",
        ])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["pipeline"], "reflected-smallest");
    assert_eq!(v["tcf"]["pre_period"][0][0], "-5");
    assert_eq!(v["tcf"]["period"][0][0], "-20/87");
    assert_eq!(v["tcf"]["period"][0][1], "127/261");
}

#[test]
fn expand_reducible_is_domain_error() {
    bin()
        .args(["expand", "--poly", "x^3-2x^2-x+2"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("rational root 1"));
}

#[test]
fn missing_required_flag_is_usage_error() {
    bin().arg("expand").assert().code(2);
}

#[test]
fn bad_root_selector_is_usage_error() {
    bin()
        .args(["expand", "--poly", "x^3-2", "--root", "median"])
        .assert()
        .code(2);
}

#[test]
fn convergents_example1() {
    bin()
        .args([
            "convergents",
            "--poly",
            "x^3-5x^2+x-3",
            "--z",
            "5",
            "--n",
            "4",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("66559/108838"))
        .stdout(predicate::str::contains("535575/108838"))
        .stdout(predicate::str::contains("20/17"));
}

#[test]
fn convergents_example2_decimal_trend() {
    bin()
        .args([
            "convergents",
            "--poly",
            "3x^3-12x^2-4x+1",
            "--z",
            "1",
            "--n",
            "5",
            "--digits",
            "6",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("4.2925"));
}

#[test]
fn matrices_integer_example1() {
    bin()
        .args([
            "matrices",
            "--poly",
            "x^3-5x^2+x-3",
            "--z",
            "5",
            "--n",
            "4",
            "--integer",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("-1183085175"))
        .stdout(predicate::str::contains("-147028831"))
        .stdout(predicate::str::contains("66559/108838"));
}

#[test]
fn matrices_rational_default() {
    bin()
        .args(["matrices", "--poly", "x^3-5x^2+x-3", "--z", "5", "--n", "1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("-84"));
}

#[test]
fn cuberoot_then_approx_via_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cbrt2.json");
    bin()
        .args(["cuberoot", "--d", "2", "--z", "1", "--json", "--out"])
        .arg(&path)
        .assert()
        .success();
    bin()
        .args([
            "approx", "--tol", "1e-12", "--n-cap", "80", "--digits", "12", "--tcf",
        ])
        .arg(&path)
        .assert()
        .success()
        .stdout(predicate::str::contains("1.259921049"));
}

#[test]
fn approx_from_poly() {
    bin()
        .args([
            "approx", "--poly", "x^3-2", "--z", "1", "--tol", "1e-12", "--n-cap", "80", "--digits",
            "12",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("1.259921049"));
}

#[test]
fn cuberoot_rejects_perfect_cube() {
    bin()
        .args(["cuberoot", "--d", "8"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("perfect cube"));
}

#[test]
fn jacobi_modified_cycle() {
    bin()
        .args(["jacobi", "--modified", "--poly", "x^3-5x^2+x-3", "--z", "5"])
        .assert()
        .success()
        .stdout(predicate::str::contains("pre-period 2, period 3"));
}

#[test]
fn jacobi_errors_flag() {
    bin()
        .args([
            "jacobi",
            "--modified",
            "--poly",
            "x^3-5x^2+x-3",
            "--z",
            "5",
            "--errors",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("errors <="));
}

#[test]
fn jacobi_classic_runs() {
    bin()
        .args([
            "jacobi",
            "--classic",
            "--poly",
            "x^3-5x^2+x-3",
            "--max-steps",
            "25",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("a = 0"))
        .stdout(predicate::str::contains("b = 4"));
}

#[test]
fn uncertified_z_refused() {
    // z = -50 on the cube needs a shift of at least 6 before it certifies;
    // with the budget capped at +-1, +-2 every stage rejects the hint
    bin()
        .args([
            "expand",
            "--poly",
            "x^3-2",
            "--z",
            "-50",
            "--shift-attempts",
            "4",
        ])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("z = -50 does not certify"))
        .stderr(predicate::str::contains("failed certificate"));
}

#[test]
fn verify_examples_passes_with_erratum_notes() {
    bin()
        .arg("verify-examples")
        .assert()
        .success()
        .stdout(predicate::str::contains("0 failed"))
        .stdout(predicate::str::contains("+46/47"))
        .stdout(predicate::str::contains("+269/120"));
}

#[test]
fn json_output_is_deterministic() {
    let run = || {
        bin()
            .args(["expand", "--poly", "3x^3-12x^2-4x+1", "--z", "-1", "--json"])
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    assert_eq!(run(), run());
}

#[test]
fn expansion_json_round_trips_into_library() {
    let out = bin()
        .args(["expand", "--poly", "x^3-2", "--z", "1", "--json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let tcf: cubic_tcf::TernaryCF = serde_json::from_value(v["tcf"].clone()).unwrap();
    assert_eq!(tcf.shape(), (2, 3));
    let direct = cubic_tcf::cube_root_expansion(&2.into(), &1.into()).unwrap();
    assert_eq!(tcf, direct);
}
