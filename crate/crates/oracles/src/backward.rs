use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use vasskit_core::{Configuration, StateId, Vass};

use crate::OracleError;

/// State-indexed antichains of minimal vectors; together they describe the
/// upward-closed set of configurations from which the target is coverable.
#[derive(Debug, Clone)]
pub struct UpwardBasis {
    minimal: Vec<Vec<Vec<BigInt>>>,
}

impl UpwardBasis {
    /// Minimal covering-source vectors at `state`, in insertion order.
    pub fn minimal_at(&self, state: StateId) -> &[Vec<BigInt>] {
        &self.minimal[state]
    }

    /// Membership query: can the target be covered starting from `s`?
    pub fn coverable_from(&self, s: &Configuration) -> bool {
        self.minimal[s.state]
            .iter()
            .any(|m| componentwise_le(m, &s.values))
    }

    pub fn total_len(&self) -> usize {
        self.minimal.iter().map(Vec::len).sum()
    }
}

fn componentwise_le(a: &[BigInt], b: &[BigInt]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Keep the antichain minimal: skip candidates already covered, evict
/// members the candidate improves on. Returns whether anything was added.
fn insert(antichain: &mut Vec<Vec<BigInt>>, cand: Vec<BigInt>) -> bool {
    if antichain.iter().any(|e| componentwise_le(e, &cand)) {
        return false;
    }
    antichain.retain(|e| !componentwise_le(&cand, e));
    antichain.push(cand);
    true
}

pub const DEFAULT_INSERTION_BUDGET: u64 = 1_000_000;

pub fn backward_coverability(vass: &Vass, target: &Configuration) -> Result<UpwardBasis, OracleError> {
    backward_coverability_budgeted(vass, target, DEFAULT_INSERTION_BUDGET)
}

/// Textbook predecessor-basis iteration: sweep every transition against the
/// current antichains, inserting `max(m − e, 0)` at the source state, until
/// a full sweep changes nothing.
pub fn backward_coverability_budgeted(
    vass: &Vass,
    target: &Configuration,
    insertion_budget: u64,
) -> Result<UpwardBasis, OracleError> {
    debug_assert_eq!(target.values.len(), vass.dim);
    let mut minimal = vec![Vec::new(); vass.states.len()];
    let mut insertions: u64 = 1;
    insert(&mut minimal[target.state], target.values.clone());
    loop {
        let mut changed = false;
        for tr in &vass.transitions {
            let members = minimal[tr.dst].clone();
            for m in members {
                let cand: Vec<BigInt> = m
                    .iter()
                    .zip(&tr.effect)
                    .map(|(v, e)| {
                        let pre = v - e;
                        if pre.is_negative() {
                            BigInt::zero()
                        } else {
                            pre
                        }
                    })
                    .collect();
                if insert(&mut minimal[tr.src], cand) {
                    changed = true;
                    insertions += 1;
                    if insertions > insertion_budget {
                        return Err(OracleError::BudgetExceeded {
                            budget: insertion_budget,
                        });
                    }
                }
            }
        }
        if !changed {
            return Ok(UpwardBasis { minimal });
        }
    }
}
