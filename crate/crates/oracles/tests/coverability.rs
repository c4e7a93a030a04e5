use num_bigint::BigInt;

use vasskit_core::{Configuration, Vass};
use vasskit_oracles::{backward_coverability, backward_coverability_budgeted, OracleError};

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

#[test]
fn zero_target_needs_only_a_state_path() {
    let mut v = Vass::new("walk", 1);
    let p = v.add_state("p");
    let q = v.add_state("q");
    let r = v.add_state("r");
    v.add_transition_i64(p, &[0], q);
    let basis = backward_coverability(&v, &Configuration::zeros(q, 1)).unwrap();
    assert_eq!(basis.minimal_at(q), [ints(&[0])]);
    assert_eq!(basis.minimal_at(p), [ints(&[0])]);
    assert!(basis.minimal_at(r).is_empty());
    assert!(basis.coverable_from(&Configuration::zeros(p, 1)));
    assert!(!basis.coverable_from(&Configuration::from_i64(r, &[7])));
}

#[test]
fn draining_loop_needs_value_one() {
    let mut v = Vass::new("drain", 1);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[-1], q);
    let basis = backward_coverability(&v, &Configuration::from_i64(q, &[1])).unwrap();
    assert_eq!(basis.minimal_at(q), [ints(&[1])]);
    assert!(!basis.coverable_from(&Configuration::zeros(q, 1)));
    assert!(basis.coverable_from(&Configuration::from_i64(q, &[1])));
    assert!(basis.coverable_from(&Configuration::from_i64(q, &[5])));
}

#[test]
fn counting_loop_lowers_the_basis_to_zero() {
    let mut v = Vass::new("count", 1);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[1], q);
    let basis = backward_coverability(&v, &Configuration::from_i64(q, &[3])).unwrap();
    assert_eq!(basis.minimal_at(q), [ints(&[0])]);
    assert!(basis.coverable_from(&Configuration::zeros(q, 1)));
}

#[test]
fn transfer_loop_builds_an_antichain() {
    let mut v = Vass::new("transfer", 2);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[-1, 1], q);
    let basis = backward_coverability(&v, &Configuration::from_i64(q, &[0, 2])).unwrap();
    let mut minimal = basis.minimal_at(q).to_vec();
    minimal.sort();
    assert_eq!(minimal, vec![ints(&[0, 2]), ints(&[1, 1]), ints(&[2, 0])]);
    assert!(basis.coverable_from(&Configuration::from_i64(q, &[2, 0])));
    assert!(!basis.coverable_from(&Configuration::from_i64(q, &[1, 0])));
}

#[test]
fn budget_error_reports_the_limit() {
    let mut v = Vass::new("count", 1);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[1], q);
    let err = backward_coverability_budgeted(&v, &Configuration::from_i64(q, &[3]), 1);
    assert_eq!(err.unwrap_err(), OracleError::BudgetExceeded { budget: 1 });
}
