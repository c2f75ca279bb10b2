//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! (plus the failing sub-checks) so `cargo test -- --nocapture` doubles as a
//! report.

use expdisk::suite::{run_criterion, SuiteConfig};

fn criterion(number: u8) {
    let outcome = run_criterion(number, &SuiteConfig::default()).expect("criterion is defined");
    println!("{}", outcome.summary_line());
    assert!(outcome.within_time(), "criterion {number} exceeded its runtime budget");
    assert!(outcome.passed, "{}", outcome.summary_line());
}

#[test]
fn criterion_01_kummer_identities() {
    criterion(1);
}

#[test]
fn criterion_02_ode_residuals() {
    criterion(2);
}

#[test]
fn criterion_03_closed_form_anchors() {
    criterion(3);
}

#[test]
fn criterion_04_kummer_pe_members() {
    criterion(4);
}

#[test]
fn criterion_05_kummer_convex_and_starlike() {
    criterion(5);
}

#[test]
fn criterion_06_lommel_pe_member() {
    criterion(6);
}

#[test]
fn criterion_07_struve_members() {
    criterion(7);
}

#[test]
fn criterion_08_delta_family_extremes() {
    criterion(8);
}

#[test]
fn criterion_09_operator_laws() {
    criterion(9);
}

#[test]
fn criterion_10_negative_controls() {
    criterion(10);
}
