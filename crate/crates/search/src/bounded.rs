use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use vasskit_core::{Configuration, Run, Semantics, Vass};

use crate::error::SearchError;
use crate::validate_config;

/// A run whose final configuration strictly dominates the configuration at
/// `split`: same state, componentwise ≥, different somewhere. Replaying the
/// suffix pumps the counters, so the witness certifies unboundedness.
#[derive(Debug, Clone)]
pub struct SelfCoveringWitness {
    pub run: Run,
    pub split: usize,
}

impl SelfCoveringWitness {
    pub fn len(&self) -> usize {
        self.run.len()
    }

    /// A self-covering run is never empty: the end must differ from the
    /// split configuration.
    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone)]
pub enum BoundednessVerdict {
    /// The run tree is finite: every branch closed by repeating an exact
    /// configuration, with no strict self-cover anywhere.
    Bounded,
    /// Shortest self-covering run, ties broken lexicographically; the
    /// split is the earliest strictly dominated index on that run.
    Unbounded(SelfCoveringWitness),
    /// The cap cut unexplored branches; certifies boundedness only when
    /// the cap is a proven witness-length bound.
    CapReached,
}

#[derive(Debug, Clone)]
pub struct BoundednessReport {
    pub verdict: BoundednessVerdict,
    pub nodes_expanded: u64,
}

struct Node {
    config: Configuration,
    parent_step: Option<(usize, usize)>,
    depth: u64,
}

/// Breadth-first search over the run tree itself — no cross-branch
/// pruning, because exact intermediate values decide the strict split. A
/// branch ends when its configuration repeats an ancestor exactly; a
/// shortest self-covering run never contains such a repeat (cutting the
/// loop, or rerouting the pump around it, always gives a strictly shorter
/// witness), so the tree search still finds a minimum-length witness, and
/// on bounded systems the tree is finite.
pub fn decide_boundedness(
    vass: &Vass,
    source: &Configuration,
    cap: &BigInt,
    budget: u64,
) -> Result<BoundednessReport, SearchError> {
    validate_config(vass, source)?;
    if cap.is_negative() {
        return Err(SearchError::NegativeCap { cap: cap.clone() });
    }
    let cap_steps = cap.to_u64().unwrap_or(u64::MAX);
    let mut nodes = vec![Node {
        config: source.clone(),
        parent_step: None,
        depth: 0,
    }];
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
            // One walk up the ancestor chain finds both the earliest
            // strictly dominated ancestor and any exact repeat.
            let mut split: Option<u64> = None;
            let mut repeats = false;
            let mut at = Some(idx);
            while let Some(a) = at {
                let anc = &nodes[a].config;
                if succ.covers(anc) {
                    if anc.values == succ.values {
                        repeats = true;
                    } else {
                        split = Some(nodes[a].depth);
                    }
                }
                at = nodes[a].parent_step.map(|(p, _)| p);
            }
            if let Some(split_depth) = split {
                let mut steps = vec![t_idx];
                let mut walk = idx;
                while let Some((parent, t)) = nodes[walk].parent_step {
                    steps.push(t);
                    walk = parent;
                }
                steps.reverse();
                let run = Run::replay(vass, &source.to_z(), &steps, Semantics::Nonnegative)
                    .expect("search steps replay");
                return Ok(BoundednessReport {
                    verdict: BoundednessVerdict::Unbounded(SelfCoveringWitness {
                        run,
                        split: split_depth as usize,
                    }),
                    nodes_expanded: expanded,
                });
            }
            if repeats {
                continue;
            }
            nodes.push(Node {
                config: succ,
                parent_step: Some((idx, t_idx)),
                depth: nodes[idx].depth + 1,
            });
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(BoundednessReport {
        verdict: if cap_cut {
            BoundednessVerdict::CapReached
        } else {
            BoundednessVerdict::Bounded
        },
        nodes_expanded: expanded,
    })
}
