use vasskit_core::{Configuration, Vass};
use vasskit_oracles::{karp_miller, karp_miller_budgeted};

fn one_loop(effect: &[i64]) -> Vass {
    let mut v = Vass::new("loop", effect.len());
    let q = v.add_state("q");
    v.add_transition_i64(q, effect, q);
    v
}

#[test]
fn counting_loop_accelerates_to_omega() {
    let v = one_loop(&[1]);
    let tree = karp_miller(&v, &Configuration::zeros(0, 1));
    assert!(!tree.truncated);
    assert_eq!(tree.len(), 3);
    assert_eq!(tree.bounded(), Some(false));
    assert_eq!(tree.nodes[1].parent, Some(0));
    assert_eq!(tree.nodes[1].transition, Some(0));
    assert_eq!(tree.dump(), "0 - 0 0\n1 0 0 w\n2 1 0 w\n");
}

#[test]
fn idle_loop_stays_finite() {
    let v = one_loop(&[0]);
    let tree = karp_miller(&v, &Configuration::zeros(0, 1));
    assert!(!tree.truncated);
    assert_eq!(tree.len(), 2);
    assert_eq!(tree.bounded(), Some(true));
    assert_eq!(tree.counter_bounded(0), Some(true));
    assert_eq!(tree.simultaneous_omega(0), Some(false));
}

#[test]
fn two_pumps_reach_simultaneous_omega() {
    let mut v = Vass::new("pumps", 2);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[1, 0], q);
    v.add_transition_i64(q, &[0, 1], q);
    let tree = karp_miller(&v, &Configuration::zeros(q, 2));
    assert!(!tree.truncated);
    assert_eq!(tree.len(), 11);
    assert_eq!(tree.bounded(), Some(false));
    assert_eq!(tree.counter_bounded(0), Some(false));
    assert_eq!(tree.counter_bounded(1), Some(false));
    assert_eq!(tree.simultaneous_omega(q), Some(true));
}

#[test]
fn one_pumped_counter_leaves_the_other_bounded() {
    let v = one_loop(&[1, 0]);
    let tree = karp_miller(&v, &Configuration::zeros(0, 2));
    assert!(!tree.truncated);
    assert_eq!(tree.counter_bounded(0), Some(false));
    assert_eq!(tree.counter_bounded(1), Some(true));
    assert_eq!(tree.simultaneous_omega(0), Some(false));
}

#[test]
fn draining_loop_terminates_without_omega() {
    let v = one_loop(&[-1]);
    let tree = karp_miller(&v, &Configuration::from_i64(0, &[2]));
    assert!(!tree.truncated);
    assert_eq!(tree.len(), 3);
    assert_eq!(tree.bounded(), Some(true));
}

#[test]
fn omega_survives_truncation() {
    let v = one_loop(&[1]);
    let tree = karp_miller_budgeted(&v, &Configuration::zeros(0, 1), 2);
    assert!(tree.truncated);
    assert_eq!(tree.bounded(), Some(false));
}

#[test]
fn truncation_withholds_finiteness_verdicts() {
    let v = one_loop(&[0]);
    let tree = karp_miller_budgeted(&v, &Configuration::zeros(0, 1), 1);
    assert!(tree.truncated);
    assert_eq!(tree.bounded(), None);
    assert_eq!(tree.counter_bounded(0), None);
    assert_eq!(tree.simultaneous_omega(0), None);
}
