//! Deterministic instance builders: seeded random systems for the test
//! corpora plus two constructed families with known dimension profiles.

use num_bigint::BigInt;
use rand::Rng;

use crate::config::Configuration;
use crate::model::Vass;

/// Uniformly random system: `n_trans` transitions with endpoints drawn
/// uniformly and effect entries drawn from `[-max_norm, max_norm]`.
pub fn random_vass(
    rng: &mut impl Rng,
    name: &str,
    dim: usize,
    n_states: usize,
    n_trans: usize,
    max_norm: i64,
) -> Vass {
    assert!(n_states > 0, "need at least one state");
    let mut v = Vass::new(name, dim);
    for i in 0..n_states {
        v.add_state(format!("q{i}"));
    }
    for _ in 0..n_trans {
        let src = rng.gen_range(0..n_states);
        let dst = rng.gen_range(0..n_states);
        let effect: Vec<BigInt> = (0..dim)
            .map(|_| BigInt::from(rng.gen_range(-max_norm..=max_norm)))
            .collect();
        v.add_transition(src, effect, dst);
    }
    v
}

/// Random system whose condensation is a simple path: one strongly
/// connected block per entry of `block_sizes`, consecutive blocks joined by
/// exactly one bridge. Each multi-state block carries a covering cycle (so
/// it really is one component) plus `extra_intra` extra internal
/// transitions; singleton blocks get a self-loop.
pub fn random_line_vass(
    rng: &mut impl Rng,
    name: &str,
    dim: usize,
    block_sizes: &[usize],
    extra_intra: usize,
    max_norm: i64,
) -> Vass {
    assert!(!block_sizes.is_empty() && block_sizes.iter().all(|&b| b > 0));
    let mut v = Vass::new(name, dim);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (bi, &size) in block_sizes.iter().enumerate() {
        let mut block = Vec::new();
        for s in 0..size {
            block.push(v.add_state(format!("b{bi}s{s}")));
        }
        blocks.push(block);
    }
    let effect = |rng: &mut dyn rand::RngCore| -> Vec<BigInt> {
        (0..dim)
            .map(|_| BigInt::from(rng.gen_range(-max_norm..=max_norm)))
            .collect()
    };
    for block in &blocks {
        if block.len() == 1 {
            let e = effect(rng);
            v.add_transition(block[0], e, block[0]);
        } else {
            for w in 0..block.len() {
                let e = effect(rng);
                v.add_transition(block[w], e, block[(w + 1) % block.len()]);
            }
            for _ in 0..extra_intra {
                let a = block[rng.gen_range(0..block.len())];
                let b = block[rng.gen_range(0..block.len())];
                let e = effect(rng);
                v.add_transition(a, e, b);
            }
        }
    }
    for pair in blocks.windows(2) {
        let a = pair[0][rng.gen_range(0..pair[0].len())];
        let b = pair[1][rng.gen_range(0..pair[1].len())];
        let e = effect(rng);
        v.add_transition(a, e, b);
    }
    v
}

/// Random configuration with values in `[0, max_value]`.
pub fn random_config(
    rng: &mut impl Rng,
    n_states: usize,
    dim: usize,
    max_value: i64,
) -> Configuration {
    let state = rng.gen_range(0..n_states);
    let values = (0..dim)
        .map(|_| BigInt::from(rng.gen_range(0..=max_value)))
        .collect();
    Configuration::new(state, values).expect("nonnegative by construction")
}

/// Linear path scheme with `k` independent pumps: a path `q1 → … → qk`
/// where `qi` carries the self-loop `+e_i`. The cycle effects span all of
/// `Q^k`, yet each component contributes a single direction.
pub fn linear_path_scheme(k: usize) -> Vass {
    assert!(k > 0);
    let mut v = Vass::new(format!("lps{k}"), k);
    for i in 1..=k {
        v.add_state(format!("q{i}"));
    }
    for i in 0..k {
        let mut e = vec![0i64; k];
        e[i] = 1;
        v.add_transition_i64(i, &e, i);
        if i + 1 < k {
            v.add_transition_i64(i, &vec![0i64; k], i + 1);
        }
    }
    v
}

/// Chain of `d` halving pumps: `q1` pumps `+e_1`; for `i ≥ 2`, `qi` carries
/// the self-loop `−2·e_{i−1} + e_i`, and consecutive states are joined by a
/// zero-effect bridge. Producing a single unit in the last counter costs a
/// run of length `2^d + d − 2`, exponential in the description size.
pub fn doubling_chain(d: usize) -> Vass {
    assert!(d > 0);
    let mut v = Vass::new(format!("chain{d}"), d);
    for i in 1..=d {
        v.add_state(format!("q{i}"));
    }
    for i in 0..d {
        let mut e = vec![0i64; d];
        if i == 0 {
            e[0] = 1;
        } else {
            e[i - 1] = -2;
            e[i] = 1;
        }
        v.add_transition_i64(i, &e, i);
        if i + 1 < d {
            v.add_transition_i64(i, &vec![0i64; d], i + 1);
        }
    }
    v
}
