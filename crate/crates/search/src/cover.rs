use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use vasskit_core::{Configuration, Run, Semantics, StateId, Vass};

use crate::error::SearchError;
use crate::validate_config;

/// A replayed nonnegative-semantics run whose final configuration covers
/// the target.
#[derive(Debug, Clone)]
pub struct CoverWitness {
    pub run: Run,
    pub target: Configuration,
}

impl CoverWitness {
    pub fn len(&self) -> usize {
        self.run.len()
    }

    pub fn is_empty(&self) -> bool {
        self.run.is_empty()
    }
}

#[derive(Debug, Clone)]
pub enum CoverVerdict {
    /// Shortest covering run; ties broken toward the lexicographically
    /// least transition-index sequence.
    Witness(CoverWitness),
    /// The pruned frontier emptied below the cap: no run of any length
    /// covers the target.
    Saturated,
    /// No witness within the cap; longer runs were not explored, so this
    /// certifies non-coverability only when the cap is itself a proven
    /// length bound.
    CapReached,
}

#[derive(Debug, Clone)]
pub struct CoverReport {
    pub verdict: CoverVerdict,
    pub nodes_expanded: u64,
}

struct Node {
    config: Configuration,
    parent_step: Option<(usize, usize)>,
    depth: u64,
}

fn reconstruct(nodes: &[Node], mut at: usize, last: usize) -> Vec<usize> {
    let mut steps = vec![last];
    while let Some((parent, t)) = nodes[at].parent_step {
        steps.push(t);
        at = parent;
    }
    steps.reverse();
    steps
}

/// Breadth-first coverability with same-state domination pruning: a fresh
/// configuration is discarded when a configuration seen no later already
/// dominates it componentwise. Pruning preserves both the shortest witness
/// length and the lexicographic tie-break: a pruned prefix is replaced by
/// an earlier-enqueued, hence lexicographically smaller, one.
pub fn decide_coverability(
    vass: &Vass,
    source: &Configuration,
    target: &Configuration,
    cap: &BigInt,
    budget: u64,
) -> Result<CoverReport, SearchError> {
    validate_config(vass, source)?;
    validate_config(vass, target)?;
    if cap.is_negative() {
        return Err(SearchError::NegativeCap { cap: cap.clone() });
    }
    let cap_steps = cap.to_u64().unwrap_or(u64::MAX);
    if source.covers(target) {
        let run = Run::replay(vass, &source.to_z(), &[], Semantics::Nonnegative)
            .expect("empty run always replays");
        return Ok(CoverReport {
            verdict: CoverVerdict::Witness(CoverWitness {
                run,
                target: target.clone(),
            }),
            nodes_expanded: 0,
        });
    }
    let mut nodes = vec![Node {
        config: source.clone(),
        parent_step: None,
        depth: 0,
    }];
    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); vass.states.len()];
    seen[source.state].push(0);
    let mut queue = VecDeque::from([0usize]);
    let mut expanded: u64 = 0;
    let mut cap_cut = false;
    while let Some(idx) = queue.pop_front() {
        if expanded == budget {
            return Err(SearchError::BudgetExceeded { budget });
        }
        expanded += 1;
        if nodes[idx].depth == cap_steps {
            cap_cut = true;
            continue;
        }
        let state = nodes[idx].config.state;
        for t_idx in vass.outgoing(state) {
            let tr = &vass.transitions[t_idx];
            let mut values = Vec::with_capacity(vass.dim);
            let mut ok = true;
            for (v, e) in nodes[idx].config.values.iter().zip(&tr.effect) {
                let next = v + e;
                if next.is_negative() {
                    ok = false;
                    break;
                }
                values.push(next);
            }
            if !ok {
                continue;
            }
            let succ = Configuration {
                state: tr.dst,
                values,
            };
            if succ.covers(target) {
                let steps = reconstruct(&nodes, idx, t_idx);
                let run = Run::replay(vass, &source.to_z(), &steps, Semantics::Nonnegative)
                    .expect("search steps replay");
                return Ok(CoverReport {
                    verdict: CoverVerdict::Witness(CoverWitness {
                        run,
                        target: target.clone(),
                    }),
                    nodes_expanded: expanded,
                });
            }
            let dominated = seen[succ.state].iter().any(|&i| {
                nodes[i]
                    .config
                    .values
                    .iter()
                    .zip(&succ.values)
                    .all(|(a, b)| a >= b)
            });
            if dominated {
                continue;
            }
            nodes.push(Node {
                config: succ,
                parent_step: Some((idx, t_idx)),
                depth: nodes[idx].depth + 1,
            });
            let new_idx = nodes.len() - 1;
            seen[nodes[new_idx].config.state].push(new_idx);
            queue.push_back(new_idx);
        }
    }
    Ok(CoverReport {
        verdict: if cap_cut {
            CoverVerdict::CapReached
        } else {
            CoverVerdict::Saturated
        },
        nodes_expanded: expanded,
    })
}

/// Coverability toward the uniform target `q(G, …, G)`.
pub fn decide_uniform_cover(
    vass: &Vass,
    source: &Configuration,
    q: StateId,
    threshold: &BigInt,
    cap: &BigInt,
    budget: u64,
) -> Result<CoverReport, SearchError> {
    if q >= vass.states.len() {
        return Err(SearchError::NoSuchState {
            state: q,
            len: vass.states.len(),
        });
    }
    if threshold.is_negative() {
        return Err(SearchError::NegativeThreshold {
            value: threshold.clone(),
        });
    }
    let target = Configuration {
        state: q,
        values: vec![threshold.clone(); vass.dim],
    };
    decide_coverability(vass, source, &target, cap, budget)
}
