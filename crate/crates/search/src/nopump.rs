//! No-pump property checker.
//!
//! The property under test: whenever some run from the source ends in state
//! `q` and every counter has, somewhere along that run, reached the
//! high-water mark `H`, then state `q` can also be covered uniformly at the
//! requested threshold by a run no longer than the tabulated cap `L`.
//!
//! The premise search runs breadth-first over pairs (configuration, set of
//! counters that have peaked so far), so a pair is never explored twice even
//! though different runs may realise it. Every state in which the premise
//! fires within the horizon is then handed to the uniform-cover decider with
//! the cap `L`; the property holds only if all of them succeed.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use vasskit_core::{step, Configuration, Run, Semantics, StateId, Vass};

use crate::bounds::{bounds, BoundParams};
use crate::cover::{decide_uniform_cover, CoverVerdict, CoverWitness};
use crate::error::SearchError;
use crate::validate_config;

/// Outcome of a no-pump check.
#[derive(Debug, Clone)]
pub enum PumpVerdict {
    /// The premise never fired. `exhaustive` is true when the premise search
    /// saturated (so the premise provably never fires from this source), and
    /// false when it merely ran out of horizon.
    Vacuous { exhaustive: bool },
    /// The premise fired in at least one state and every such state admitted
    /// a uniform covering run within the cap. The witness shown is for the
    /// first premise state discovered.
    Confirmed {
        premise_state: StateId,
        witness: CoverWitness,
    },
    /// The premise fired in `premise_state` but no run within the cap covers
    /// that state uniformly, so the claimed length bound fails there.
    Violated { premise_state: StateId },
    /// A resource ceiling (bound overflow or node budget) prevented settling
    /// either the premise or a conclusion.
    Inconclusive,
}

/// Full record of a no-pump check, including the numeric marks used.
#[derive(Debug, Clone)]
pub struct PumpReport {
    pub verdict: PumpVerdict,
    /// High-water mark every counter must reach for the premise to fire.
    pub high_mark: BigInt,
    /// Run-length cap given to the uniform-cover searches.
    pub cover_bound: BigInt,
    /// A run realising the premise, when one was found.
    pub premise_run: Option<Run>,
    /// Node expansions across the premise search and all cover searches.
    pub nodes_expanded: u64,
}

struct PNode {
    config: Configuration,
    mask: u64,
    parent_step: Option<(usize, usize)>,
    depth: u64,
}

/// Check the no-pump property with the default horizon of four times the
/// cover cap. `budget` limits node expansions in each search phase
/// separately; exhausting it yields an `Inconclusive` report, not an error.
pub fn check_no_pump_property(
    vass: &Vass,
    source: &Configuration,
    threshold: &BigInt,
    budget: u64,
) -> Result<PumpReport, SearchError> {
    run_check(vass, source, threshold, None, budget)
}

/// Same check with an explicit premise-search horizon in steps.
pub fn check_no_pump_with_horizon(
    vass: &Vass,
    source: &Configuration,
    threshold: &BigInt,
    horizon: u64,
    budget: u64,
) -> Result<PumpReport, SearchError> {
    run_check(vass, source, threshold, Some(horizon), budget)
}

fn run_check(
    vass: &Vass,
    source: &Configuration,
    threshold: &BigInt,
    horizon: Option<u64>,
    budget: u64,
) -> Result<PumpReport, SearchError> {
    validate_config(vass, source)?;
    if threshold.is_negative() {
        return Err(SearchError::NegativeThreshold {
            value: threshold.clone(),
        });
    }
    assert!(
        vass.dim <= 64,
        "premise tracking uses a 64-bit peak mask; dimension {} is too wide",
        vass.dim
    );

    let params = BoundParams::of_instance(vass).with_uniform_target(threshold.clone());
    let table = bounds(&params);
    let high_mark = table.uniform_h[table.params.g].clone();
    let cover_bound = table.uniform_cap().clone();

    // A clamped mark would silently weaken the premise (and a clamped cap
    // would weaken the conclusion), so refuse to certify anything with them.
    if table.is_clamped(&high_mark) || table.is_clamped(&cover_bound) {
        return Ok(PumpReport {
            verdict: PumpVerdict::Inconclusive,
            high_mark,
            cover_bound,
            premise_run: None,
            nodes_expanded: 0,
        });
    }

    let horizon = horizon.unwrap_or_else(|| {
        (&cover_bound * BigInt::from(4)).to_u64().unwrap_or(u64::MAX)
    });

    let full_mask: u64 = if vass.dim == 0 {
        0
    } else {
        u64::MAX >> (64 - vass.dim)
    };
    let peaks = |mask: u64, c: &Configuration| -> u64 {
        let mut m = mask;
        for (i, v) in c.values.iter().enumerate() {
            if v >= &high_mark {
                m |= 1 << i;
            }
        }
        m
    };

    let mut nodes = Vec::new();
    let mut seen: HashSet<(Configuration, u64)> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut premise: Vec<(StateId, usize)> = Vec::new();
    let mut state_hit = vec![false; vass.states.len()];

    let root_mask = peaks(0, source);
    nodes.push(PNode {
        config: source.clone(),
        mask: root_mask,
        parent_step: None,
        depth: 0,
    });
    seen.insert((source.clone(), root_mask));
    queue.push_back(0usize);
    if root_mask == full_mask {
        state_hit[source.state] = true;
        premise.push((source.state, 0));
    }

    let mut expanded: u64 = 0;
    let mut budget_hit = false;
    let mut horizon_cut = false;
    'bfs: while let Some(at) = queue.pop_front() {
        if premise.len() == vass.states.len() {
            break;
        }
        if expanded == budget {
            budget_hit = true;
            break;
        }
        expanded += 1;
        if nodes[at].depth == horizon {
            horizon_cut = true;
            continue;
        }
        for t in vass.outgoing(nodes[at].config.state) {
            let next = match step(vass, &nodes[at].config, t) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let mask = peaks(nodes[at].mask, &next);
            if !seen.insert((next.clone(), mask)) {
                continue;
            }
            let idx = nodes.len();
            let depth = nodes[at].depth + 1;
            if mask == full_mask && !state_hit[next.state] {
                state_hit[next.state] = true;
                premise.push((next.state, idx));
            }
            nodes.push(PNode {
                config: next,
                mask,
                parent_step: Some((at, t)),
                depth,
            });
            queue.push_back(idx);
            if premise.len() == vass.states.len() {
                break 'bfs;
            }
        }
    }

    let rebuild = |idx: usize| -> Run {
        let mut steps = Vec::new();
        let mut at = idx;
        while let Some((parent, t)) = nodes[at].parent_step {
            steps.push(t);
            at = parent;
        }
        steps.reverse();
        Run::replay(vass, &source.to_z(), &steps, Semantics::Nonnegative)
            .expect("premise search steps replay")
    };

    if premise.is_empty() {
        let verdict = if budget_hit {
            PumpVerdict::Inconclusive
        } else {
            PumpVerdict::Vacuous {
                exhaustive: !horizon_cut,
            }
        };
        return Ok(PumpReport {
            verdict,
            high_mark,
            cover_bound,
            premise_run: None,
            nodes_expanded: expanded,
        });
    }

    let mut total = expanded;
    let mut confirmed: Option<(StateId, CoverWitness)> = None;
    for &(q, idx) in &premise {
        let report = decide_uniform_cover(vass, source, q, threshold, &cover_bound, budget);
        let report = match report {
            Ok(r) => r,
            Err(SearchError::BudgetExceeded { .. }) => {
                return Ok(PumpReport {
                    verdict: PumpVerdict::Inconclusive,
                    high_mark,
                    cover_bound,
                    premise_run: Some(rebuild(idx)),
                    nodes_expanded: total,
                });
            }
            Err(e) => return Err(e),
        };
        total += report.nodes_expanded;
        match report.verdict {
            CoverVerdict::Witness(w) => {
                if confirmed.is_none() {
                    confirmed = Some((q, w));
                }
            }
            // The cap is the tabulated (unclamped) length bound, so hitting
            // it without a witness refutes the bounded conclusion just as a
            // saturated search does.
            CoverVerdict::Saturated | CoverVerdict::CapReached => {
                return Ok(PumpReport {
                    verdict: PumpVerdict::Violated { premise_state: q },
                    high_mark,
                    cover_bound,
                    premise_run: Some(rebuild(idx)),
                    nodes_expanded: total,
                });
            }
        }
    }

    let (premise_state, witness) = confirmed.expect("premise list was nonempty");
    let first_idx = premise[0].1;
    Ok(PumpReport {
        verdict: PumpVerdict::Confirmed {
            premise_state,
            witness,
        },
        high_mark,
        cover_bound,
        premise_run: Some(rebuild(first_idx)),
        nodes_expanded: total,
    })
}
