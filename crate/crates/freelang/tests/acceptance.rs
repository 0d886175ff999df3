//! Acceptance suite: one test per verification check, each printing its
//! pass/fail line. `freelang check` runs the same checks from the command
//! line. A check that skips with a documented reason (an infeasible search
//! budget) does not fail the suite; an actual mismatch does.

use freelang::checks::{self, CheckConfig, CheckOutcome};

fn assert_outcome(outcome: CheckOutcome) {
    println!("{}", outcome.render_line());
    assert!(
        outcome.passed(),
        "{} failed: {}",
        outcome.id,
        outcome.detail
    );
}

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

#[test]
fn criterion_1_ternary_factor_boolean_bounds() {
    assert_outcome(checks::ternary_factor_boolean_bounds(cfg()));
}

#[test]
fn criterion_2_subword_boolean_bounds() {
    assert_outcome(checks::subword_boolean_bounds(cfg()));
}

#[test]
fn criterion_3_binary_bifix_union_exact() {
    assert_outcome(checks::binary_bifix_union_exact(cfg()));
}

#[test]
fn criterion_4_binary_factor_union_conjecture() {
    assert_outcome(checks::binary_factor_union_conjecture(cfg()));
}

#[test]
fn criterion_5_enumeration_table() {
    assert_outcome(checks::binary_factor_union_enumeration_table(cfg()));
}

#[test]
fn criterion_6_product_and_star_bounds() {
    assert_outcome(checks::product_and_star_bounds(cfg()));
}

#[test]
fn criterion_7_reversal_bounds() {
    assert_outcome(checks::reversal_bounds(cfg()));
}

#[test]
fn criterion_8_subword_union_alphabet_impossibility() {
    assert_outcome(checks::subword_union_alphabet_impossibility(cfg()));
}

#[test]
fn criterion_9_property_suites() {
    assert_outcome(checks::property_suites(cfg()));
}

/// The whole suite in one shot, as the CLI runs it.
#[test]
fn all_checks_pass_together() {
    let outcomes = checks::run_all(cfg());
    for o in &outcomes {
        println!("{}", o.render_line());
    }
    assert_eq!(outcomes.len(), 9);
    assert!(outcomes.iter().all(CheckOutcome::passed));
}
