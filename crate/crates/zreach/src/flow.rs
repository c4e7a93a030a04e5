//! Euler-flow route to Z-reachability.
//!
//! A transition multiset realises a run from `s` to `t` iff it balances
//! flow at every state (with one surplus departure at the source and one
//! surplus arrival at the target), its effects sum to `t − s`, and its
//! support hangs together as one undirected component reachable from the
//! source state. Supports are swept smallest-first; each one contributes a
//! tiny equality program over its transitions, with multiplicities forced
//! positive by substituting `x = 1 + y`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use vasskit_core::{Run, Semantics, StateId, Vass, ZConfiguration};
use vasskit_geometry::{small_solution_eq, GeometryError, SolveOptions};

use crate::{validate_z, ZReachError, ZRun};

/// Largest transition count the subset sweep will attempt; beyond this the
/// enumeration (2^|T| subsets) stops being a desk-scale affair.
pub const SUPPORT_LIMIT: usize = 16;

/// A balanced, connected transition multiset witnessing Z-reachability.
#[derive(Debug, Clone)]
pub struct FlowSolution {
    pub source: StateId,
    pub target: StateId,
    /// Support transitions, ascending by index.
    pub support: Vec<usize>,
    /// Positive multiplicity for each support transition, in step.
    pub multiplicities: Vec<BigInt>,
}

impl FlowSolution {
    /// Total number of steps in any walk realising the flow.
    pub fn total(&self) -> BigInt {
        self.multiplicities.iter().sum()
    }

    pub fn multiplicity_of(&self, transition: usize) -> BigInt {
        self.support
            .iter()
            .position(|&t| t == transition)
            .map(|i| self.multiplicities[i].clone())
            .unwrap_or_default()
    }

    /// Re-derive every invariant from scratch: conservation, effect sum,
    /// positivity, and connectivity.
    pub fn verify(&self, vass: &Vass, s: &ZConfiguration, t: &ZConfiguration) -> bool {
        if self.source != s.state || self.target != t.state {
            return false;
        }
        if self.support.len() != self.multiplicities.len() {
            return false;
        }
        if self.multiplicities.iter().any(|m| !m.is_positive()) {
            return false;
        }
        let mut out_minus_in = vec![BigInt::zero(); vass.states.len()];
        let mut effect = vec![BigInt::zero(); vass.dim];
        for (&ti, mult) in self.support.iter().zip(&self.multiplicities) {
            let tr = &vass.transitions[ti];
            out_minus_in[tr.src] += mult;
            out_minus_in[tr.dst] -= mult;
            for (i, e) in tr.effect.iter().enumerate() {
                effect[i] += mult * e;
            }
        }
        for (q, flow) in out_minus_in.iter().enumerate() {
            let mut want = BigInt::zero();
            if q == self.source {
                want += 1;
            }
            if q == self.target {
                want -= 1;
            }
            if *flow != want {
                return false;
            }
        }
        for (i, total) in effect.iter().enumerate() {
            if *total != &t.values[i] - &s.values[i] {
                return false;
            }
        }
        connected(vass, &self.support, self.source, self.target)
    }
}

/// Is the support one undirected component containing both endpoints?
fn connected(vass: &Vass, support: &[usize], from: StateId, to: StateId) -> bool {
    let mut reach = vec![false; vass.states.len()];
    reach[from] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &ti in support {
            let tr = &vass.transitions[ti];
            if reach[tr.src] != reach[tr.dst] {
                reach[tr.src] = true;
                reach[tr.dst] = true;
                changed = true;
            }
        }
    }
    reach[to]
        && support
            .iter()
            .all(|&ti| reach[vass.transitions[ti].src])
}

/// Sweep connected supports smallest-first and solve each one's system.
/// Returns the first feasible flow in (support size, support index order);
/// `None` means no support at all admits one, which refutes reachability.
pub fn find_flow(
    vass: &Vass,
    s: &ZConfiguration,
    t: &ZConfiguration,
    cap_override: Option<&BigInt>,
) -> Result<Option<FlowSolution>, ZReachError> {
    validate_z(vass, s)?;
    validate_z(vass, t)?;
    let m = vass.transitions.len();
    if m > SUPPORT_LIMIT {
        return Err(ZReachError::TooManyTransitions {
            count: m,
            limit: SUPPORT_LIMIT,
        });
    }
    if let Some(cap) = cap_override {
        if !cap.is_positive() {
            return Err(ZReachError::BadCap { cap: cap.clone() });
        }
    }

    let mut masks: Vec<u32> = (0..1u32 << m).collect();
    masks.sort_by_key(|v| (v.count_ones(), *v));

    for mask in masks {
        let support: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if !connected(vass, &support, s.state, t.state) {
            continue;
        }
        if let Some(mult) = solve_support(vass, s, t, &support, cap_override)? {
            return Ok(Some(FlowSolution {
                source: s.state,
                target: t.state,
                support,
                multiplicities: mult,
            }));
        }
    }
    Ok(None)
}

/// One equality program: flow conservation rows then effect rows, columns
/// the support transitions, all multiplicities shifted down by one.
fn solve_support(
    vass: &Vass,
    s: &ZConfiguration,
    t: &ZConfiguration,
    support: &[usize],
    cap_override: Option<&BigInt>,
) -> Result<Option<Vec<BigInt>>, ZReachError> {
    let n = vass.states.len();
    let d = vass.dim;
    let k = support.len();
    let mut rows = vec![vec![BigInt::zero(); k]; n + d];
    let mut rhs = vec![BigInt::zero(); n + d];
    for (j, &ti) in support.iter().enumerate() {
        let tr = &vass.transitions[ti];
        rows[tr.src][j] += 1;
        rows[tr.dst][j] -= 1;
        for (i, e) in tr.effect.iter().enumerate() {
            rows[n + i][j] = e.clone();
        }
    }
    rhs[s.state] += 1;
    rhs[t.state] -= 1;
    for i in 0..d {
        rhs[n + i] = &t.values[i] - &s.values[i];
    }
    // Substitute x = 1 + y so the support stays fully used.
    for (r, row) in rows.iter().enumerate() {
        let ones: BigInt = row.iter().sum();
        rhs[r] -= ones;
    }

    let cap = match cap_override {
        Some(c) => c.clone(),
        None => default_cap(n, d, &rows, &rhs),
    };
    match small_solution_eq(&rows, &rhs, &cap, &SolveOptions::default()) {
        Ok(Some(y)) => Ok(Some(y.into_iter().map(|v| v + 1).collect())),
        Ok(None) => Ok(None),
        Err(GeometryError::BudgetExceeded { budget }) => {
            Err(ZReachError::BudgetExceeded { budget })
        }
        Err(e) => unreachable!("flow system is well formed: {e}"),
    }
}

/// Default multiplicity ceiling `(n·N + 1)^d · (d + 1)` with `N` the
/// largest absolute value in the system; generous for desk-scale systems
/// and overridable when it is not.
fn default_cap(n: usize, d: usize, rows: &[Vec<BigInt>], rhs: &[BigInt]) -> BigInt {
    let mut big_n = BigInt::zero();
    for v in rows.iter().flatten().chain(rhs.iter()) {
        let a = v.abs();
        if a > big_n {
            big_n = a;
        }
    }
    let base = BigInt::from(n) * big_n + 1u32;
    base.pow(d as u32) * BigInt::from(d + 1)
}

/// Walk the flow multigraph with Hierholzer's method, always leaving along
/// the least-indexed transition with copies remaining. The result uses each
/// support transition exactly its multiplicity, starting at the flow's
/// source state and ending at its target.
pub fn euler_walk(vass: &Vass, flow: &FlowSolution) -> Vec<usize> {
    let mut remaining: Vec<u64> = flow
        .multiplicities
        .iter()
        .map(|m| m.to_u64().expect("desk-scale multiplicity"))
        .collect();
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); vass.states.len()];
    for (j, &ti) in flow.support.iter().enumerate() {
        out_edges[vass.transitions[ti].src].push(j);
    }

    let mut trail = Vec::new();
    let mut stack: Vec<(StateId, Option<usize>)> = vec![(flow.source, None)];
    while let Some(&(at, _)) = stack.last() {
        match out_edges[at].iter().copied().find(|&j| remaining[j] > 0) {
            Some(j) => {
                remaining[j] -= 1;
                let ti = flow.support[j];
                stack.push((vass.transitions[ti].dst, Some(ti)));
            }
            None => {
                if let (_, Some(ti)) = stack.pop().expect("stack nonempty") {
                    trail.push(ti);
                }
            }
        }
    }
    trail.reverse();
    debug_assert!(remaining.iter().all(|&r| r == 0), "flow not exhausted");
    trail
}

/// Decide Z-reachability and build an explicit run for the positive case.
/// `None` is a genuine refutation: no transition multiset balances.
pub fn decide_zreach(
    vass: &Vass,
    s: &ZConfiguration,
    t: &ZConfiguration,
) -> Result<Option<ZRun>, ZReachError> {
    let Some(flow) = find_flow(vass, s, t, None)? else {
        return Ok(None);
    };
    let steps = euler_walk(vass, &flow);
    let run = Run::replay(vass, s, &steps, Semantics::Integer).expect("euler walk replays");
    debug_assert_eq!(run.end(), t, "flow effects must land on the target");
    Ok(Some(run))
}
