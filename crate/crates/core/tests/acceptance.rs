//! The acceptance gate: one test per suite criterion. Each test prints a
//! single pass/fail line (visible with `--nocapture` or on failure) and
//! asserts the verdict.

use walg::suite::{run_criterion, SuiteConfig};

fn check(id: usize) {
    let cfg = SuiteConfig::default();
    let rep = run_criterion(id, &cfg).expect("known criterion");
    println!(
        "criterion {}: {} — {}",
        rep.id,
        if rep.pass { "PASS" } else { "FAIL" },
        rep.name
    );
    for d in &rep.details {
        println!("  {d}");
    }
    assert!(rep.pass, "criterion {} failed: {:?}", rep.id, rep.details);
}

#[test]
fn criterion_01_worked_central_polynomial() {
    check(1);
}

#[test]
fn criterion_02_proper_subalgebra_verdict() {
    check(2);
}

#[test]
fn criterion_03_free_generators_and_residuals() {
    check(3);
}

#[test]
fn criterion_04_krull_dimension_formula() {
    check(4);
}

#[test]
fn criterion_05_induction_invariants() {
    check(5);
}

#[test]
fn criterion_06_centralizer_oracle() {
    check(6);
}

#[test]
fn criterion_07_rigidity_exhaustive() {
    check(7);
}

#[test]
fn criterion_08_induced_module_dimensions() {
    check(8);
}

#[test]
fn criterion_09_simple_modules_at_desk_scale() {
    check(9);
}

#[test]
fn criterion_10_documented_exclusions() {
    check(10);
}
