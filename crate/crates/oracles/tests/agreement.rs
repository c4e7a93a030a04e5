//! The three oracles must tell one coherent story on random instances.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vasskit_core::gen::{random_config, random_vass};
use vasskit_oracles::{
    backward_coverability, bfs_reach, karp_miller_budgeted, OmegaConfiguration,
};

#[test]
fn oracles_agree_on_fully_explored_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0001);
    let mut usable = 0;
    for i in 0..250 {
        let dim = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let nt = rng.gen_range(1..=4);
        let v = random_vass(&mut rng, &format!("r{i}"), dim, n, nt, 1);
        let s = random_config(&mut rng, n, dim, 2);
        let t = random_config(&mut rng, n, dim, 2);
        let reach = bfs_reach(&v, &s, &BigInt::from(6), 60);
        if reach.truncated {
            continue;
        }
        let tree = karp_miller_budgeted(&v, &s, 100_000);
        if tree.truncated {
            continue;
        }
        usable += 1;
        // a complete in-box exploration means the reachable set is finite
        assert_eq!(tree.bounded(), Some(true), "instance {i}");
        let basis = backward_coverability(&v, &t).unwrap();
        assert_eq!(
            basis.coverable_from(&s),
            reach.covering_distance(&t).is_some(),
            "instance {i}"
        );
    }
    assert!(usable >= 50, "only {usable} instances survived the filters");
}

#[test]
fn unbounded_instances_truncate_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0002);
    let mut seen_unbounded = 0;
    for i in 0..150 {
        let dim = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let v = random_vass(&mut rng, &format!("u{i}"), dim, n, 4, 1);
        let s = random_config(&mut rng, n, dim, 2);
        let tree = karp_miller_budgeted(&v, &s, 100_000);
        if tree.bounded() != Some(false) {
            continue;
        }
        seen_unbounded += 1;
        let reach = bfs_reach(&v, &s, &BigInt::from(6), 60);
        assert!(reach.truncated, "instance {i}");
    }
    assert!(seen_unbounded >= 20, "only {seen_unbounded} unbounded instances");
}

#[test]
fn km_labels_cover_everything_bfs_finds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0003);
    let mut checked = 0;
    for i in 0..120 {
        let dim = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=3);
        let v = random_vass(&mut rng, &format!("c{i}"), dim, n, 3, 1);
        let s = random_config(&mut rng, n, dim, 2);
        let tree = karp_miller_budgeted(&v, &s, 100_000);
        if tree.truncated {
            continue;
        }
        let reach = bfs_reach(&v, &s, &BigInt::from(5), 40);
        for c in &reach.order {
            let cw = OmegaConfiguration::from_configuration(c);
            assert!(
                tree.nodes.iter().any(|nd| nd.config.covers(&cw)),
                "instance {i}: {c} escapes every label"
            );
            checked += 1;
        }
    }
    assert!(checked >= 500, "only {checked} configurations checked");
}
