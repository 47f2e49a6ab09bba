use std::process::{Command, Output};

use serde_json::Value;

fn ellbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellbern")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = ellbern(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn ebp_text_and_latex() {
    assert_eq!(stdout(&ellbern(&["ebp", "--k", "0"])).trim(), "2*s + 1");
    assert_eq!(stdout(&ellbern(&["ebp", "--k", "1", "--format", "latex"])).trim(), r"\frac{1}{12} g_1 s(s+1)(2s+1)");
}

#[test]
fn ebp_json_uses_exact_strings() {
    let v = json(&["ebp", "--k", "1", "--format", "json"]);
    let terms = v["terms"].as_array().unwrap();
    assert!(terms.iter().any(|t| t["coefficient"] == "1/12" && t["exponents"]["s"] == 1 && t["exponents"]["g1"] == 1));
    assert!(terms.iter().all(|t| t["coefficient"].is_string()));
}

#[test]
fn ebp_evaluation_at_a_point() {
    let v = json(&["ebp", "--k", "1", "--spin", "1", "--a", "1,2,3", "--format", "json"]);
    assert_eq!(v["value"], "12");
}

#[test]
fn spectrum_examples() {
    let v = json(&["spectrum", "--spin", "1", "--a", "1,2,3"]);
    assert_eq!(v["exact_char_poly"], "E^3 - 12*E^2 + 47*E - 60");
    assert_eq!(v["eigenvalues"], serde_json::json!([3.0, 4.0, 5.0]));

    let v = json(&["spectrum", "--spin", "0", "--a", "7,-1,2/3"]);
    assert_eq!(v["exact_char_poly"], "E");
    assert_eq!(v["eigenvalues"], serde_json::json!([0.0]));

    let v = json(&["spectrum", "--spin", "3/2", "--a", "2,-1,-1"]);
    let ev: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(ev.len(), 4);
    assert_eq!(ev[0], ev[1]);
    assert_eq!(ev[2], ev[3]);
    assert_eq!(ev[0], -ev[3]);
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["ebp", "--k", "1", "--format", "xml"][..],
        &["spectrum", "--spin", "1", "--a", "1.5,2,3"],
        &["spectrum", "--spin", "0.5", "--a", "1,2,3"],
        &["spectrum", "--spin", "1", "--a", "1,2"],
    ] {
        let out = ellbern(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn lame_coefficients_and_spectral_polynomial() {
    let out = stdout(&ellbern(&["lame-coeffs", "--k", "2", "--reduced"]));
    assert_eq!(out.lines().count(), 2);
    assert!(out.starts_with("b1 = "));
    let r = stdout(&ellbern(&["lame-coeffs", "--spin", "1", "--a", "1,2,3"]));
    assert_eq!(r.trim(), "E^3 - 12*E^2 + 47*E - 60");
}

#[test]
fn verify_small_grid_passes_and_is_reproducible() {
    let args = ["verify", "--k", "2", "--spin", "2", "--trials", "2", "--seed", "11"];
    let a = ellbern(&args);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&ellbern(&args)));
    let v = json(&["verify", "--k", "2", "--spin", "2", "--trials", "2", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["passed"] == true));
}

#[test]
fn verify_corrupted_fixture_names_coefficient() {
    let out = ellbern(&["verify", "--k", "4", "--spin", "2", "--trials", "1", "--corrupt-fixture"]);
    assert!(!out.status.success());
    let text = stdout(&out);
    assert!(text.contains("FAIL fixtures"), "{text}");
    assert!(text.contains("B9: coefficient of s^9*g2^2"), "{text}");
}

#[test]
fn figure_data_writes_csv_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = ellbern(&["figure-data", "--k", "7", "--component", "0,2,1", "--count", "11", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let text = std::fs::read_to_string(files[0].as_ref().unwrap().path()).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,value,sin_ref"));
    assert_eq!(lines.next(), Some("0,0,0"));
    assert_eq!(lines.count(), 10);
}

#[test]
fn figure_data_b3_midpoint() {
    let text = stdout(&ellbern(&["figure-data", "--k", "1", "--component", "1,0,0", "--count", "3", "--range", "0,1"]));
    let mid: Vec<f64> = text.lines().nth(2).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(mid[0], 0.5);
    assert!((mid[1] - 3.0 * std::f64::consts::PI).abs() < 1e-12);
}

#[test]
fn figure_data_absent_component_lists_available() {
    let out = ellbern(&["figure-data", "--k", "2", "--component", "0,0,5"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("(0,1,0)") && err.contains("(2,0,0)"), "{err}");
}

#[test]
fn default_figure_data_covers_report_components() {
    let dir = tempfile::tempdir().unwrap();
    let out = ellbern(&["figure-data", "--k", "7", "--count", "5", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 4);
}
