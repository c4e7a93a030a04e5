use num_bigint::BigInt;

use vasskit_core::gen::doubling_chain;
use vasskit_core::{Configuration, Vass};
use vasskit_oracles::bfs_reach;

fn counting_loop() -> Vass {
    let mut v = Vass::new("count", 1);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[1], q);
    v
}

#[test]
fn counting_loop_fills_the_box() {
    let v = counting_loop();
    let reach = bfs_reach(&v, &Configuration::zeros(0, 1), &BigInt::from(3), 10);
    assert_eq!(reach.len(), 4);
    for k in 0..=3i64 {
        assert_eq!(reach.dist[&Configuration::from_i64(0, &[k])], k as usize);
    }
    assert!(reach.truncated, "the loop keeps climbing past the box");
}

#[test]
fn no_transitions_reach_only_the_start() {
    let mut v = Vass::new("still", 2);
    let q = v.add_state("q");
    v.add_state("r");
    let start = Configuration::from_i64(q, &[1, 2]);
    let reach = bfs_reach(&v, &start, &BigInt::from(9), 10);
    assert_eq!(reach.order, vec![start]);
    assert!(!reach.truncated);
}

#[test]
fn start_outside_the_box_is_truncation() {
    let v = counting_loop();
    let reach = bfs_reach(&v, &Configuration::from_i64(0, &[5]), &BigInt::from(3), 10);
    assert!(reach.is_empty());
    assert!(reach.truncated);
}

#[test]
fn depth_cap_flags_the_unfinished_frontier() {
    let v = counting_loop();
    let reach = bfs_reach(&v, &Configuration::zeros(0, 1), &BigInt::from(10), 2);
    assert_eq!(reach.len(), 3);
    assert!(reach.truncated);
}

#[test]
fn draining_loop_explores_completely() {
    let mut v = Vass::new("drain", 1);
    let q = v.add_state("q");
    v.add_transition_i64(q, &[-1], q);
    let reach = bfs_reach(&v, &Configuration::from_i64(q, &[2]), &BigInt::from(5), 10);
    assert_eq!(reach.len(), 3);
    assert!(!reach.truncated);
    assert_eq!(reach.dist[&Configuration::zeros(q, 1)], 2);
}

#[test]
fn chain_covering_distance_is_exponential() {
    let v = doubling_chain(3);
    let reach = bfs_reach(&v, &Configuration::zeros(0, 3), &BigInt::from(4), 16);
    let target = Configuration::from_i64(2, &[0, 0, 1]);
    assert_eq!(reach.covering_distance(&target), Some(9));
}
