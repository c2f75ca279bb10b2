use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn expdisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expdisk")).args(args).env_remove("EXPDISK_ANGLES").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

fn rows(csv_text: &str) -> Vec<(f64, String, f64, f64)> {
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].parse().unwrap(), r[1].to_string(), r[2].parse().unwrap(), r[3].parse().unwrap())
        })
        .collect()
}

#[test]
fn eval_kummer_exp_at_one() {
    let out = expdisk(&["eval", "kummer", "--a", "2", "--c", "2", "--z", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((num(&v[0]["f_re"]) - std::f64::consts::E).abs() < 1e-14);
    assert_eq!(num(&v[0]["f_im"]), 0.0);
}

#[test]
fn eval_struve_u_at_origin() {
    let out = expdisk(&["eval", "struve-u", "--kappa", "2", "--cparam", "1", "--z", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(num(&json(&out)[0]["f_re"]), 1.0);
}

#[test]
fn eval_lommel_matches_bessel() {
    let out = expdisk(&["eval", "lommel", "--mu", "1", "--nu", "0", "--z", "0.5,0", "--z", "-0.25,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let j = expdisk(&["eval", "bessel-j", "--nu", "0", "--z", &format!("{},0", 0.5f64.sqrt())]);
    let j0 = num(&json(&j)[0]["f_re"]);
    assert!((num(&v[0]["f_re"]) - (4.0 - 4.0 * j0)).abs() < 1e-12);
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn certify_kummer_pe_member() {
    let out = expdisk(&["certify", "--fn", "kummer", "--a", "-1", "--c", "3", "--class", "Pe"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "verified_on_grid");
    assert!((num(&v["max_log_mod"]) - 0.405).abs() < 0.01);
    assert_eq!(v["circle_max"].as_array().unwrap().len(), 3);
}

#[test]
fn certify_refutes_linear_polynomial() {
    let out = expdisk(&["certify", "--fn", "poly", "--coeffs", "1,2", "--class", "Pe"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "refuted");
    assert!(num(&v["max_log_mod"]) > 1.09);
}

#[test]
fn certify_constant_one() {
    let out = expdisk(&["certify", "--fn", "poly", "--coeffs", "1", "--class", "Pe"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(num(&json(&out)["max_log_mod"]), 0.0);
}

#[test]
fn certify_writes_file_and_honours_plan() {
    let path = tmp("certify.json");
    let out = expdisk(&[
        "certify",
        "--fn",
        "exp",
        "--class",
        "Pe",
        "--radii",
        "0.5,0.9",
        "--angles",
        "512",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["angles"], 512);
    assert!((num(&v["max_log_mod"]) - 0.9).abs() < 1e-12);
}

#[test]
fn check_with_verification() {
    let out = expdisk(&["check", "CH_P", "--a", "-100", "--c", "102", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["all_satisfied"], true);
    assert_eq!(v["certificates"][0]["certificate"]["status"], "verified_on_grid");
}

#[test]
fn check_struve_hypothesis() {
    let out = expdisk(&["check", "STR_P", "--kappa", "2", "--cparam", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["all_satisfied"], true);
}

#[test]
fn check_failing_hypothesis_reports_slack() {
    let out = expdisk(&["check", "ch-p", "--a", "5", "--c", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["all_satisfied"], false);
    assert_eq!(num(&v["conditions"][0]["slack"]), -4.0);
}

#[test]
fn figure_image_stays_inside_boundary() {
    // Λ(1;2) is convex-exponential: its convexity quantity maps the circle
    // into the region bounded by exp of the unit circle.
    let out = expdisk(&["figure", "--fn", "kummer-lambda", "--a", "1", "--c", "2", "--class", "Ke", "--angles", "360"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("theta,curve,re,im\n"));
    let rows = rows(&text);
    let image: Vec<_> = rows.iter().filter(|r| r.1 == "image").collect();
    let boundary: Vec<_> = rows.iter().filter(|r| r.1 == "boundary").collect();
    assert_eq!(image.len(), 361);
    assert_eq!(boundary.len(), 361);
    for curve in [&image, &boundary] {
        let (first, last) = (curve[0], curve[curve.len() - 1]);
        assert_eq!((first.2, first.3), (last.2, last.3), "curve not closed");
    }
    for r in &image {
        let log_mod = r.2.hypot(r.3).ln().hypot(r.3.atan2(r.2));
        assert!(log_mod < 1.0, "image point ({}, {}) outside", r.2, r.3);
    }
}

#[test]
fn figure_exp_and_determinism() {
    let args = ["figure", "--fn", "exp", "--radius", "0.5", "--angles", "64"];
    let a = expdisk(&args);
    let b = expdisk(&args);
    assert_eq!(a.stdout, b.stdout);
    for (theta, curve, re, im) in rows(&String::from_utf8(a.stdout).unwrap()) {
        if curve == "image" {
            let w = (0.5 * theta.cos()).exp();
            let expected = (w * (0.5 * theta.sin()).cos(), w * (0.5 * theta.sin()).sin());
            assert!((re - expected.0).abs() < 1e-14 && (im - expected.1).abs() < 1e-14);
        }
    }
}

#[test]
fn figure_angle_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_expdisk"))
        .args(["figure", "--fn", "exp"])
        .env("EXPDISK_ANGLES", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(rows(&String::from_utf8(out.stdout).unwrap()).len(), 2 * 17);
    let bad = Command::new(env!("CARGO_BIN_EXE_expdisk"))
        .args(["figure", "--fn", "exp"])
        .env("EXPDISK_ANGLES", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn suite_filter_selects_lommel_checks() {
    let out = expdisk(&["suite", "--filter", "lommel"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let criteria = v["criteria"].as_array().unwrap();
    assert!(!criteria.is_empty());
    for c in criteria {
        for check in c["checks"].as_array().unwrap() {
            let tags = check["tags"].as_array().unwrap();
            assert!(
                tags.iter().any(|t| t == "lommel") || check["name"].as_str().unwrap().contains("lommel"),
                "{check}"
            );
        }
    }
}

#[test]
fn suite_output_is_reproducible() {
    let a = expdisk(&["suite", "--filter", "operators", "--seed", "7"]);
    let b = expdisk(&["suite", "--filter", "operators", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &["eval", "kummer", "--a", "1", "--c", "0", "--z", "0.5"][..],
        &["eval", "kummer", "--a", "1", "--c", "2", "--z", "2,0"],
        &["eval", "kummer", "--a", "x", "--c", "2", "--z", "0"],
        &["check", "NOT_A_THEOREM", "--a", "1"],
        &["certify", "--fn", "poly", "--coeffs", "1", "--class", "Pe", "--radii", "1.5"],
        &["suite", "--filter", "no-such-tag"],
        &["frobnicate"],
    ] {
        let out = expdisk(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn figure_q1_strictly_inside() {
    let out = expdisk(&["figure", "--fn", "kummer", "--a", "-1", "--c", "3", "--class", "Pe"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = rows(&String::from_utf8(out.stdout).unwrap());
    let worst = rows
        .iter()
        .filter(|r| r.1 == "image")
        .map(|r| r.2.hypot(r.3).ln().hypot(r.3.atan2(r.2)))
        .fold(0.0f64, f64::max);
    assert_eq!(rows.len(), 2 * 4097);
    assert!(1.0 - worst > 0.5, "gap {}", 1.0 - worst);
}
