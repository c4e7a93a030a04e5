use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vasskit_core::gen::{doubling_chain, random_config, random_vass};
use vasskit_core::{Configuration, Semantics, Vass};
use vasskit_oracles::backward_coverability_budgeted;
use vasskit_search::{
    bounds, decide_coverability, decide_uniform_cover, BoundParams, CoverVerdict, SearchError,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn single_loop(effect: &[i64]) -> Vass {
    let mut v = Vass::new("loop", effect.len());
    let q = v.add_state("q");
    v.add_transition_i64(q, effect, q);
    v
}

#[test]
fn covering_source_needs_no_steps() {
    let v = single_loop(&[1]);
    let r = decide_coverability(
        &v,
        &Configuration::from_i64(0, &[3]),
        &Configuration::from_i64(0, &[2]),
        &big(10),
        1_000,
    )
    .unwrap();
    match r.verdict {
        CoverVerdict::Witness(w) => {
            assert_eq!(w.len(), 0);
            assert_eq!(r.nodes_expanded, 0);
        }
        other => panic!("expected an empty witness, got {other:?}"),
    }
}

#[test]
fn doubling_chain_witness_is_exponential() {
    // Covering one unit in the last counter of the three-stage chain takes
    // 2^3 + 3 − 2 = 9 steps, and at that length the step sequence is forced.
    let v = doubling_chain(3);
    let r = decide_coverability(
        &v,
        &Configuration::from_i64(0, &[0, 0, 0]),
        &Configuration::from_i64(2, &[0, 0, 1]),
        &big(100),
        100_000,
    )
    .unwrap();
    match r.verdict {
        CoverVerdict::Witness(w) => {
            assert_eq!(w.len(), 9);
            assert_eq!(w.run.steps, vec![0, 0, 0, 0, 1, 2, 2, 3, 4]);
            assert_eq!(w.run.semantics, Semantics::Nonnegative);
            assert!(w.run.end().to_nat().unwrap().covers(&w.target));
        }
        other => panic!("expected a witness, got {other:?}"),
    }
}

#[test]
fn draining_loop_saturates() {
    let v = single_loop(&[-1]);
    let r = decide_coverability(
        &v,
        &Configuration::from_i64(0, &[0]),
        &Configuration::from_i64(0, &[1]),
        &big(1_000),
        1_000,
    )
    .unwrap();
    assert!(matches!(r.verdict, CoverVerdict::Saturated));
    assert_eq!(r.nodes_expanded, 1);
}

#[test]
fn exhausted_budget_is_an_error() {
    let v = single_loop(&[1]);
    let r = decide_coverability(
        &v,
        &Configuration::from_i64(0, &[0]),
        &Configuration::from_i64(0, &[1_000]),
        &big(1 << 20),
        5,
    );
    assert!(matches!(r, Err(SearchError::BudgetExceeded { budget: 5 })));
}

#[test]
fn short_cap_reports_cap_reached() {
    let v = single_loop(&[1]);
    let r = decide_coverability(
        &v,
        &Configuration::from_i64(0, &[0]),
        &Configuration::from_i64(0, &[10]),
        &big(3),
        1_000,
    )
    .unwrap();
    assert!(matches!(r.verdict, CoverVerdict::CapReached));
}

#[test]
fn uniform_cover_with_two_pumps() {
    let mut v = Vass::new("pumps", 2);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[1, 0], q);
    v.add_transition_i64(q, &[0, 1], q);
    let r = decide_uniform_cover(
        &v,
        &Configuration::from_i64(0, &[0, 0]),
        0,
        &big(1),
        &big(50),
        10_000,
    )
    .unwrap();
    match r.verdict {
        CoverVerdict::Witness(w) => {
            assert_eq!(w.len(), 2);
            assert_eq!(w.run.steps, vec![0, 1]);
            assert_eq!(w.target, Configuration::from_i64(0, &[1, 1]));
        }
        other => panic!("expected a witness, got {other:?}"),
    }
}

#[test]
fn uniform_cover_with_a_joint_pump() {
    let v = single_loop(&[1, 1]);
    let r = decide_uniform_cover(
        &v,
        &Configuration::from_i64(0, &[0, 0]),
        0,
        &big(2),
        &big(50),
        10_000,
    )
    .unwrap();
    match r.verdict {
        CoverVerdict::Witness(w) => assert_eq!(w.len(), 2),
        other => panic!("expected a witness, got {other:?}"),
    }
}

#[test]
fn uniform_cover_starved_counter_saturates() {
    let v = single_loop(&[0, -1]);
    let r = decide_uniform_cover(
        &v,
        &Configuration::from_i64(0, &[0, 5]),
        0,
        &big(1),
        &big(1_000),
        10_000,
    )
    .unwrap();
    assert!(matches!(r.verdict, CoverVerdict::Saturated));
}

/// Cross-check against the backward fixpoint on random instances. The cap
/// handed to the forward search is the tabulated length bound, so every
/// verdict including a cap cut is definitive, and only budget exhaustion on
/// either side leaves an instance unscored.
#[test]
fn agreement_with_the_backward_fixpoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0fe_0001);
    let mut scored = 0usize;
    for i in 0..60 {
        let v = random_vass(&mut rng, &format!("r{i}"), 2, 3, 5, 2);
        let source = random_config(&mut rng, 3, 2, 2);
        let target = random_config(&mut rng, 3, 2, 1);
        let table = bounds(
            &BoundParams::of_instance(&v)
                .with_target_norm(target.values.iter().max().cloned().unwrap_or_default()),
        );
        let cap = table.cover_cap();
        if table.is_clamped(&cap) {
            continue;
        }
        let Ok(report) = decide_coverability(&v, &source, &target, &cap, 15_000) else {
            continue;
        };
        let Ok(basis) = backward_coverability_budgeted(&v, &target, 60_000) else {
            continue;
        };
        let backward_says = basis.coverable_from(&source);
        match report.verdict {
            CoverVerdict::Witness(w) => {
                assert!(backward_says, "forward witness but backward denies");
                assert!(w.run.end().to_nat().unwrap().covers(&target));
                assert!(big(w.len() as i64) <= cap);
            }
            CoverVerdict::Saturated | CoverVerdict::CapReached => {
                assert!(!backward_says, "backward covers but forward refutes");
            }
        }
        scored += 1;
    }
    assert!(scored >= 30, "only {scored} instances were scored");
}
