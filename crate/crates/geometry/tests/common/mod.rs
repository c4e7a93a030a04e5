//! Brute-force oracles: simple-cycle enumeration and exhaustive
//! distinguished-set search. Exponential, for small test instances only.
#![allow(dead_code)] // each test binary uses a different subset

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use vasskit_core::Vass;
use vasskit_geometry::{rebase, CycleSpace};

/// Effects of all simple cycles (no repeated state except the endpoints).
/// Each cycle is rooted at its smallest state, so every cyclic class is
/// emitted exactly once.
pub fn simple_cycle_effects(vass: &Vass) -> Vec<(usize, Vec<BigInt>)> {
    let n = vass.states.len();
    let mut out = Vec::new();
    for base in 0..n {
        let mut visited = vec![false; n];
        visited[base] = true;
        let mut steps: Vec<usize> = Vec::new();
        dfs(vass, base, base, &mut visited, &mut steps, &mut out);
    }
    out
}

fn dfs(
    vass: &Vass,
    base: usize,
    current: usize,
    visited: &mut Vec<bool>,
    steps: &mut Vec<usize>,
    out: &mut Vec<(usize, Vec<BigInt>)>,
) {
    for t in vass.outgoing(current) {
        let dst = vass.transitions[t].dst;
        if dst == base {
            steps.push(t);
            let mut eff = vec![BigInt::zero(); vass.dim];
            for &s in steps.iter() {
                for (e, a) in eff.iter_mut().zip(&vass.transitions[s].effect) {
                    *e += a;
                }
            }
            out.push((base, eff));
            steps.pop();
        } else if dst > base && !visited[dst] {
            visited[dst] = true;
            steps.push(t);
            dfs(vass, base, dst, visited, steps, out);
            steps.pop();
            visited[dst] = false;
        }
    }
}

/// All coordinate sets of size g whose canonical-basis columns are
/// invertible, i.e. exactly the candidate distinguished sets.
pub fn all_valid_distinguished(space: &CycleSpace) -> Vec<Vec<usize>> {
    (0..space.dim)
        .combinations(space.rank)
        .filter(|coords| rebase(&space.basis, coords).is_some())
        .collect()
}

/// Direct evaluation of the smallness definition over all candidate sets.
pub fn exhaustive_small(space: &CycleSpace, v: &[BigInt], c: &BigInt) -> bool {
    all_valid_distinguished(space)
        .iter()
        .any(|coords| coords.iter().all(|&i| &v[i] < c))
}

/// Direct evaluation of the boundedness definition (for every k, fewer than
/// k distinguished values reach threshold C_{g−k}) over all candidate sets.
pub fn exhaustive_thin(space: &CycleSpace, v: &[BigInt], thresholds: &[BigInt]) -> bool {
    let g = space.rank;
    all_valid_distinguished(space).iter().any(|coords| {
        (1..=g).all(|k| {
            let bound = &thresholds[g - k];
            let count = coords.iter().filter(|&&i| &v[i] >= bound).count();
            count < k
        })
    })
}

/// Sorted value profile of a candidate set.
pub fn profile_of(v: &[BigInt], coords: &[usize]) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = coords.iter().map(|&i| v[i].clone()).collect();
    p.sort();
    p
}
