//! End-to-end checks of the command-line interface: flag handling, exit
//! codes, output schemas, and cross-command consistency.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dipolar"))
}

fn run_ok(args: &[&str]) -> Output {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run_ok(args);
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON record")
}

fn exit_code(args: &[&str]) -> i32 {
    bin()
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .unwrap_or(-1)
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("dipolar-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn point_below_boundary_is_separable() {
    let v = stdout_json(&["point", "--beta", "0", "--d", "1"]);
    assert_eq!(v["concurrence_numeric"].as_f64().unwrap(), 0.0);
    assert_eq!(v["concurrence_analytic"].as_f64().unwrap(), 0.0);
}

#[test]
fn point_above_boundary_is_entangled() {
    let v = stdout_json(&["point", "--beta", "3", "--d", "1"]);
    assert!(v["concurrence_numeric"].as_f64().unwrap() > 0.0);
    let boundary = v["boundary_beta_at_d"].as_f64().unwrap();
    assert!((2.21..=2.31).contains(&boundary));
}

#[test]
fn point_longitudinal_field_is_separable() {
    let v = stdout_json(&["point", "--beta", "5", "--d", "3", "--theta", "0"]);
    assert_eq!(v["concurrence_numeric"].as_f64().unwrap(), 0.0);
    assert!(
        v.get("concurrence_analytic").is_none(),
        "no analytic route off-axis"
    );
}

#[test]
fn point_numeric_method_omits_analytic() {
    let v = stdout_json(&["point", "--beta", "5", "--d", "3", "--method", "numeric"]);
    assert!(v.get("concurrence_analytic").is_none());
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: flag parse errors
    assert_eq!(exit_code(&["point", "--beta", "abc", "--d", "1"]), 2);
    assert_eq!(exit_code(&["point", "--nonsense"]), 2);
    // 3: domain errors
    assert_eq!(exit_code(&["point", "--beta", "-1", "--d", "1"]), 3);
    assert_eq!(
        exit_code(&["point", "--beta", "5", "--d", "3", "--theta", "0", "--method", "analytic"]),
        3
    );
    assert_eq!(exit_code(&["fit", "--d", "3", "--beta-max", "0.1"]), 3);
    // 4: unwritable output path
    assert_eq!(
        exit_code(&["boundary", "--d", "1", "--out", "/nonexistent-dir/x.csv"]),
        4
    );
}

#[test]
fn every_subcommand_has_help() {
    for sub in [
        "point",
        "from-physical",
        "sweep",
        "boundary",
        "figure",
        "fit",
        "nspin",
    ] {
        let out = bin().args([sub, "--help"]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{sub} --help");
        assert!(!out.stdout.is_empty());
    }
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn from_physical_reproduces_reference_arithmetic() {
    let v = stdout_json(&[
        "from-physical",
        "--gamma",
        "4.0025",
        "--field",
        "3",
        "--temperature",
        "0.33",
        "--dipolar-khz",
        "4",
    ]);
    assert!((v["omega0_khz"].as_f64().unwrap() - 12.0075).abs() < 1e-12);
    assert!((v["beta"].as_f64().unwrap() - 1.7462700364680273).abs() < 1e-12);

    // doubling the temperature halves both reduced parameters exactly
    let v2 = stdout_json(&[
        "from-physical",
        "--gamma",
        "4.0025",
        "--field",
        "3",
        "--temperature",
        "0.66",
        "--dipolar-khz",
        "4",
    ]);
    assert_eq!(
        v["beta"].as_f64().unwrap(),
        2.0 * v2["beta"].as_f64().unwrap()
    );
    assert_eq!(v["d"].as_f64().unwrap(), 2.0 * v2["d"].as_f64().unwrap());
}

#[test]
fn from_physical_input_validation() {
    // both coupling flags: clap conflict → 2
    assert_eq!(
        exit_code(&[
            "from-physical",
            "--gamma",
            "4",
            "--field",
            "3",
            "--temperature",
            "0.33",
            "--distance",
            "0.2",
            "--dipolar-khz",
            "4",
        ]),
        2
    );
    // neither coupling flag → 3
    assert_eq!(
        exit_code(&[
            "from-physical",
            "--gamma",
            "4",
            "--field",
            "3",
            "--temperature",
            "0.33"
        ]),
        3
    );
    // nonpositive input → 3
    assert_eq!(
        exit_code(&[
            "from-physical",
            "--gamma",
            "4",
            "--field",
            "3",
            "--temperature",
            "-1",
            "--dipolar-khz",
            "4",
        ]),
        3
    );
}

#[test]
fn sweep_both_writes_paired_columns_and_diff_metadata() {
    let out_path = temp_path("sweep-both.csv");
    run_ok(&[
        "sweep",
        "--beta",
        "0:10:21",
        "--d",
        "3",
        "--theta",
        "pi/2",
        "--method",
        "both",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&out_path).unwrap();
    let header = text
        .lines()
        .find(|l| !l.starts_with('#'))
        .expect("has a header line");
    assert_eq!(
        header,
        "beta,d,theta,phi,concurrence,magnetization,method,error,\
         concurrence_analytic,magnetization_analytic,concurrence_abs_diff,magnetization_abs_diff"
    );
    let diff_line = text
        .lines()
        .find(|l| l.starts_with("# max_concurrence_diff:"))
        .expect("metadata records the max pairing difference");
    let diff: f64 = diff_line.rsplit(' ').next().unwrap().parse().unwrap();
    assert!(diff <= 1e-8, "validation flag exceeded: {diff:e}");
    fs::remove_file(&out_path).ok();
}

#[test]
fn sweep_json_round_trips() {
    let out_path = temp_path("sweep.json");
    run_ok(&[
        "sweep",
        "--beta",
        "0:2:3",
        "--d",
        "1",
        "--out",
        out_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["meta"]["method"], "numeric");
    assert_eq!(v["rows"][0]["concurrence"].as_f64().unwrap(), 0.0);
    fs::remove_file(&out_path).ok();
}

#[test]
fn figure_two_boundary_row_matches_published_value() {
    let out_path = temp_path("fig2.csv");
    run_ok(&["figure", "2", "--out", out_path.to_str().unwrap()]);
    let text = fs::read_to_string(&out_path).unwrap();
    let mut found = false;
    for line in text.lines().filter(|l| !l.starts_with('#')).skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let d: f64 = fields[0].parse().unwrap();
        if (d - 1.0).abs() < 1e-9 {
            let beta_c: f64 = fields[1].parse().unwrap();
            assert!((2.21..=2.31).contains(&beta_c), "beta_c = {beta_c}");
            found = true;
        }
    }
    assert!(found, "d = 1 row must exist in the boundary trace");
    fs::remove_file(&out_path).ok();
}

#[test]
fn fit_prints_the_linear_relation() {
    let out = run_ok(&["fit", "--d", "3", "--beta-max", "3.32"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let a: f64 = text
        .split("a=")
        .nth(1)
        .and_then(|s| s.split_whitespace().next())
        .unwrap()
        .parse()
        .unwrap();
    let b: f64 = text
        .split("b=")
        .nth(1)
        .and_then(|s| s.split_whitespace().next())
        .unwrap()
        .parse()
        .unwrap();
    assert!((a + 0.71).abs() <= 0.05, "a = {a}");
    assert!((b - 0.26).abs() <= 0.03, "b = {b}");
}

fn write_geometry(name: &str, contents: &str) -> PathBuf {
    let p = temp_path(name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn nspin_two_sites_reproduces_point() {
    let geom = write_geometry("pair.txt", "0 0 0\n1 0 0\n");
    let v = stdout_json(&[
        "nspin",
        "--geometry",
        geom.to_str().unwrap(),
        "--beta",
        "5",
        "--d-ref",
        "3",
        "--pair",
        "1",
        "2",
    ]);
    let p = stdout_json(&[
        "point", "--beta", "5", "--d", "3", "--theta", "pi/2", "--phi", "0",
    ]);
    assert_eq!(
        v["concurrence"].as_f64().unwrap(),
        p["concurrence_numeric"].as_f64().unwrap()
    );
    assert_eq!(
        v["magnetization"].as_f64().unwrap(),
        p["magnetization"].as_f64().unwrap()
    );
    fs::remove_file(&geom).ok();
}

#[test]
fn nspin_triangle_pairs_are_equivalent() {
    let geom = write_geometry(
        "triangle.txt",
        "# equilateral triangle in the transverse plane\n0 0 0\n1 0 0\n0.5 0.8660254037844386 0\n",
    );
    let mut cs = Vec::new();
    for pair in [["1", "2"], ["1", "3"], ["2", "3"]] {
        let v = stdout_json(&[
            "nspin",
            "--geometry",
            geom.to_str().unwrap(),
            "--beta",
            "5",
            "--d-ref",
            "3",
            "--pair",
            pair[0],
            pair[1],
        ]);
        cs.push(v["concurrence"].as_f64().unwrap());
    }
    for c in &cs {
        assert!((c - cs[0]).abs() <= 1e-10);
    }
    assert!(cs[0] > 0.0);
    fs::remove_file(&geom).ok();
}

#[test]
fn nspin_zero_coupling_is_separable() {
    let geom = write_geometry("tri0.txt", "0 0 0\n1 0 0\n0.5 0.8660254037844386 0\n");
    for pair in [["1", "2"], ["1", "3"], ["2", "3"]] {
        let v = stdout_json(&[
            "nspin",
            "--geometry",
            geom.to_str().unwrap(),
            "--beta",
            "5",
            "--d-ref",
            "0",
            "--pair",
            pair[0],
            pair[1],
        ]);
        assert!(v["concurrence"].as_f64().unwrap() <= 1e-12);
    }
    fs::remove_file(&geom).ok();
}

#[test]
fn nspin_guards_malformed_and_oversized_geometries() {
    let bad = write_geometry("bad.txt", "0 0\n1 0 0\n");
    assert_eq!(
        exit_code(&[
            "nspin",
            "--geometry",
            bad.to_str().unwrap(),
            "--beta",
            "1",
            "--d-ref",
            "1",
            "--pair",
            "1",
            "2"
        ]),
        3
    );
    fs::remove_file(&bad).ok();

    assert_eq!(
        exit_code(&[
            "nspin",
            "--geometry",
            "/nonexistent.txt",
            "--beta",
            "1",
            "--d-ref",
            "1",
            "--pair",
            "1",
            "2"
        ]),
        3
    );

    let mut big = String::new();
    for i in 0..15 {
        big.push_str(&format!("{i} 0 0\n"));
    }
    let big_path = write_geometry("big.txt", &big);
    assert_eq!(
        exit_code(&[
            "nspin",
            "--geometry",
            big_path.to_str().unwrap(),
            "--beta",
            "1",
            "--d-ref",
            "1",
            "--pair",
            "1",
            "2"
        ]),
        5
    );
    fs::remove_file(&big_path).ok();
}
