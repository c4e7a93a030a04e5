//! Base-case unboundedness over integer counters.
//!
//! With counters ranged over all of ℤ a self-covering run exists iff some
//! state `q` reachable in the state graph carries a closed walk with effect
//! ≩ 0. Any such walk shrinks to a skeleton: a closed walk `σ` of length at
//! most `n²` plus nonnegative multiplicities over simple cycles whose states
//! the skeleton already visits. This module enumerates skeleton classes
//! (keyed by visited-state set and effect), solves one small integer program
//! per class and coordinate, and rebuilds the shortest witness found.
//!
//! The per-coordinate systems ask for `eff(σ) + Σ xθ·eff(θ) ≥ e_p`; ranging
//! `p` over all coordinates covers exactly the runs with effect ≥ 0 and ≠ 0.
//! Solutions are capped at `(r+1)·(r·N)^r` for a rank-`r` system with
//! largest entry `N`, which is enough for some solution whenever one exists,
//! so a run of `None` over every skeleton is a proof of boundedness.
//!
//! Enumeration cost grows quickly with state count and out-degree; the
//! function is meant for the small instances the rest of this crate targets
//! and panics rather than guess if the solver budget is ever exhausted.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use vasskit_core::{Run, Semantics, StateId, Vass, ZConfiguration};
use vasskit_geometry::{solve_ineq_unchecked, RationalMatrix, SolveOptions};

use crate::bounded::SelfCoveringWitness;

struct Cycle {
    base: StateId,
    steps: Vec<usize>,
    effect: Vec<BigInt>,
    mask: u64,
}

/// Search for a self-covering run under integer semantics. Returns the
/// shortest witness over every skeleton considered (ties broken by step
/// sequence), or `None` when the instance is bounded as a ℤ-system.
pub fn base_case_unbounded_ilp(vass: &Vass, source: &ZConfiguration) -> Option<SelfCoveringWitness> {
    assert!(
        source.state < vass.states.len(),
        "source state {} out of range",
        source.state
    );
    assert_eq!(source.values.len(), vass.dim, "source dimension mismatch");
    assert!(
        vass.states.len() <= 64,
        "skeleton tracking uses a 64-bit state mask"
    );

    let n = vass.states.len();
    let d = vass.dim;

    // Shortest paths in the state graph; first visit in transition order
    // keeps the step sequences lexicographically least among the shortest.
    let mut prev: Vec<Option<(StateId, usize)>> = vec![None; n];
    let mut reached = vec![false; n];
    reached[source.state] = true;
    let mut queue = VecDeque::from([source.state]);
    while let Some(s) = queue.pop_front() {
        for t in vass.outgoing(s) {
            let dst = vass.transitions[t].dst;
            if !reached[dst] {
                reached[dst] = true;
                prev[dst] = Some((s, t));
                queue.push_back(dst);
            }
        }
    }
    let path_to = |q: StateId| -> Vec<usize> {
        let mut steps = Vec::new();
        let mut at = q;
        while let Some((p, t)) = prev[at] {
            steps.push(t);
            at = p;
        }
        steps.reverse();
        steps
    };

    let cycles = simple_cycles(vass);

    let mut best: Option<(usize, Vec<usize>, usize)> = None;
    for (q, _) in reached.iter().enumerate().filter(|(_, r)| **r) {
        let prefix = path_to(q);
        for (mask, eff, sigma) in skeleton_classes(vass, q) {
            let allowed: Vec<&Cycle> =
                cycles.iter().filter(|c| c.mask & !mask == 0).collect();
            let rows: Vec<Vec<BigInt>> = (0..d)
                .map(|i| allowed.iter().map(|c| c.effect[i].clone()).collect())
                .collect();
            for p in 0..d {
                let rhs: Vec<BigInt> = (0..d)
                    .map(|i| BigInt::from(u64::from(i == p)) - &eff[i])
                    .collect();
                let multiplicities = if allowed.is_empty() {
                    if rhs.iter().all(|v| !v.is_positive()) {
                        Some(Vec::new())
                    } else {
                        None
                    }
                } else {
                    let cap = solution_cap(&rows, &rhs, allowed.len());
                    solve_ineq_unchecked(&rows, &rhs, &cap, &SolveOptions::default())
                        .expect("skeleton system within solver budget")
                };
                let Some(x) = multiplicities else { continue };
                let steps = assemble(&prefix, &sigma, &allowed, &x, q, vass);
                let split = prefix.len();
                let cand = (steps.len(), steps, split);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
    }

    best.map(|(_, steps, split)| {
        let run = Run::replay(vass, source, &steps, Semantics::Integer)
            .expect("assembled witness replays");
        SelfCoveringWitness { run, split }
    })
}

/// Every simple cycle, rooted at its least state, in deterministic order.
fn simple_cycles(vass: &Vass) -> Vec<Cycle> {
    let n = vass.states.len();
    let mut out = Vec::new();
    for base in 0..n {
        let mut steps = Vec::new();
        let mut visited = vec![false; n];
        visited[base] = true;
        dfs_cycles(vass, base, base, &mut steps, &mut visited, &mut out);
    }
    out
}

fn dfs_cycles(
    vass: &Vass,
    base: StateId,
    cur: StateId,
    steps: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    out: &mut Vec<Cycle>,
) {
    for t in vass.outgoing(cur) {
        let dst = vass.transitions[t].dst;
        if dst == base {
            steps.push(t);
            let mut effect = vec![BigInt::zero(); vass.dim];
            let mut mask = 0u64;
            for &s in steps.iter() {
                for (i, e) in vass.transitions[s].effect.iter().enumerate() {
                    effect[i] += e;
                }
                mask |= 1 << vass.transitions[s].src;
            }
            out.push(Cycle {
                base,
                steps: steps.clone(),
                effect,
                mask,
            });
            steps.pop();
        } else if dst > base && !visited[dst] {
            visited[dst] = true;
            steps.push(t);
            dfs_cycles(vass, base, dst, steps, visited, out);
            steps.pop();
            visited[dst] = false;
        }
    }
}

/// Closed walks at `q` of length ≤ n², one representative per
/// (visited-state set, effect) class, preferring the shortest then
/// lexicographically least representative. Includes the empty walk.
fn skeleton_classes(vass: &Vass, q: StateId) -> Vec<(u64, Vec<BigInt>, Vec<usize>)> {
    let max_len = vass.states.len() * vass.states.len();
    let mut classes: HashMap<(u64, Vec<BigInt>), Vec<usize>> = HashMap::new();
    classes.insert((1 << q, vec![BigInt::zero(); vass.dim]), Vec::new());
    let mut steps = Vec::new();
    let mut eff = vec![BigInt::zero(); vass.dim];
    dfs_walks(vass, q, q, max_len, &mut steps, &mut eff, 1 << q, &mut classes);
    let mut out: Vec<(u64, Vec<BigInt>, Vec<usize>)> = classes
        .into_iter()
        .map(|((mask, eff), steps)| (mask, eff, steps))
        .collect();
    out.sort_by(|a, b| (a.2.len(), &a.2).cmp(&(b.2.len(), &b.2)));
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs_walks(
    vass: &Vass,
    q: StateId,
    cur: StateId,
    max_len: usize,
    steps: &mut Vec<usize>,
    eff: &mut Vec<BigInt>,
    mask: u64,
    classes: &mut HashMap<(u64, Vec<BigInt>), Vec<usize>>,
) {
    if cur == q && !steps.is_empty() {
        match classes.entry((mask, eff.clone())) {
            Entry::Occupied(mut e) => {
                let rep = e.get_mut();
                if (steps.len(), steps.as_slice()) < (rep.len(), rep.as_slice()) {
                    *rep = steps.clone();
                }
            }
            Entry::Vacant(e) => {
                e.insert(steps.clone());
            }
        }
    }
    if steps.len() == max_len {
        return;
    }
    for t in vass.outgoing(cur) {
        let tr = &vass.transitions[t];
        steps.push(t);
        for (i, e) in tr.effect.iter().enumerate() {
            eff[i] += e;
        }
        dfs_walks(vass, q, tr.dst, max_len, steps, eff, mask | (1 << tr.dst), classes);
        for (i, e) in tr.effect.iter().enumerate() {
            eff[i] -= e;
        }
        steps.pop();
    }
}

/// Norm-based ceiling under which some solution exists whenever the system
/// is feasible: `(r+1)·(r·N)^r` with `r` the coefficient rank and `N` the
/// largest absolute entry.
fn solution_cap(rows: &[Vec<BigInt>], rhs: &[BigInt], cols: usize) -> BigInt {
    let r = RationalMatrix::from_int_rows(rows, cols)
        .expect("skeleton matrix is well formed")
        .rank();
    let mut n_max = BigInt::zero();
    for v in rows.iter().flatten().chain(rhs.iter()) {
        let a = v.abs();
        if a > n_max {
            n_max = a;
        }
    }
    let rn = BigInt::from(r) * n_max;
    BigInt::from(r + 1) * rn.pow(r as u32)
}

/// Splice each cycle, repeated per its multiplicity, into the skeleton at
/// the first visit of the cycle's base state.
fn assemble(
    prefix: &[usize],
    sigma: &[usize],
    allowed: &[&Cycle],
    x: &[BigInt],
    q: StateId,
    vass: &Vass,
) -> Vec<usize> {
    let mut state_seq = vec![q];
    for &s in sigma {
        state_seq.push(vass.transitions[s].dst);
    }
    let mut out = prefix.to_vec();
    let mut inserted = vec![false; allowed.len()];
    for (pos, &at) in state_seq.iter().enumerate() {
        for (j, cyc) in allowed.iter().enumerate() {
            if inserted[j] || x[j].is_zero() || cyc.base != at {
                continue;
            }
            inserted[j] = true;
            let reps = x[j].to_u64().expect("capped multiplicity fits u64");
            for _ in 0..reps {
                out.extend_from_slice(&cyc.steps);
            }
        }
        if pos < sigma.len() {
            out.push(sigma[pos]);
        }
    }
    debug_assert!(inserted
        .iter()
        .zip(x)
        .all(|(done, mult)| *done || mult.is_zero()));
    out
}
