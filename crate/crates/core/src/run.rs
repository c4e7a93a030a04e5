use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::config::{Configuration, ZConfiguration};
use crate::error::SemanticsError;
use crate::model::Vass;

/// Which counter discipline a run obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// Counters must stay ≥ 0 at every configuration.
    Nonnegative,
    /// Counters range over all of Z.
    Integer,
}

fn check_transition(vass: &Vass, t: usize) -> Result<(), SemanticsError> {
    if t >= vass.transitions.len() {
        return Err(SemanticsError::NoSuchTransition {
            t,
            len: vass.transitions.len(),
        });
    }
    Ok(())
}

/// One step under nonnegative semantics.
pub fn step(vass: &Vass, c: &Configuration, t: usize) -> Result<Configuration, SemanticsError> {
    check_transition(vass, t)?;
    let tr = &vass.transitions[t];
    if c.values.len() != vass.dim {
        return Err(SemanticsError::DimensionMismatch {
            got: c.values.len(),
            want: vass.dim,
        });
    }
    if tr.src != c.state {
        return Err(SemanticsError::StateMismatch {
            t,
            expected: vass.states[tr.src].clone(),
            found: vass.states[c.state].clone(),
        });
    }
    let mut values = Vec::with_capacity(vass.dim);
    for (i, (v, e)) in c.values.iter().zip(&tr.effect).enumerate() {
        let next = v + e;
        if next.is_negative() {
            return Err(SemanticsError::Underflow {
                t,
                counter: i,
                value: next,
            });
        }
        values.push(next);
    }
    Ok(Configuration {
        state: tr.dst,
        values,
    })
}

/// One step under integer semantics; never underflows.
pub fn step_z(vass: &Vass, c: &ZConfiguration, t: usize) -> Result<ZConfiguration, SemanticsError> {
    check_transition(vass, t)?;
    let tr = &vass.transitions[t];
    if c.values.len() != vass.dim {
        return Err(SemanticsError::DimensionMismatch {
            got: c.values.len(),
            want: vass.dim,
        });
    }
    if tr.src != c.state {
        return Err(SemanticsError::StateMismatch {
            t,
            expected: vass.states[tr.src].clone(),
            found: vass.states[c.state].clone(),
        });
    }
    let values = c.values.iter().zip(&tr.effect).map(|(v, e)| v + e).collect();
    Ok(ZConfiguration {
        state: tr.dst,
        values,
    })
}

/// Sum of effects along a chained step sequence; the empty path has effect 0.
pub fn path_effect(vass: &Vass, steps: &[usize]) -> Result<Vec<BigInt>, SemanticsError> {
    let mut eff = vec![BigInt::zero(); vass.dim];
    for (k, &t) in steps.iter().enumerate() {
        check_transition(vass, t)?;
        if k > 0 {
            let prev = steps[k - 1];
            let expected = vass.transitions[t].src;
            let found = vass.transitions[prev].dst;
            if expected != found {
                return Err(SemanticsError::DisconnectedSteps {
                    earlier: prev,
                    later: t,
                    expected: vass.states[expected].clone(),
                    found: vass.states[found].clone(),
                });
            }
        }
        for (e, a) in eff.iter_mut().zip(&vass.transitions[t].effect) {
            *e += a;
        }
    }
    Ok(eff)
}

/// A replayed run: step indices plus the full visited trace.
///
/// `trace` has one more entry than `steps`; `trace[0]` is the start. Under
/// [`Semantics::Nonnegative`] every trace entry is componentwise ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub semantics: Semantics,
    pub steps: Vec<usize>,
    pub trace: Vec<ZConfiguration>,
}

impl Run {
    /// Replays `steps` from `start`, validating chaining and (under
    /// nonnegative semantics) that no counter ever drops below zero.
    pub fn replay(
        vass: &Vass,
        start: &ZConfiguration,
        steps: &[usize],
        semantics: Semantics,
    ) -> Result<Run, SemanticsError> {
        if start.values.len() != vass.dim {
            return Err(SemanticsError::DimensionMismatch {
                got: start.values.len(),
                want: vass.dim,
            });
        }
        if start.state >= vass.states.len() {
            return Err(SemanticsError::NoSuchState {
                state: start.state,
                len: vass.states.len(),
            });
        }
        if semantics == Semantics::Nonnegative {
            start.to_nat()?;
        }
        let mut trace = Vec::with_capacity(steps.len() + 1);
        trace.push(start.clone());
        let mut current = start.clone();
        for &t in steps {
            current = match semantics {
                Semantics::Integer => step_z(vass, &current, t)?,
                Semantics::Nonnegative => {
                    let c = current.to_nat()?;
                    step(vass, &c, t)?.to_z()
                }
            };
            trace.push(current.clone());
        }
        Ok(Run {
            semantics,
            steps: steps.to_vec(),
            trace,
        })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self) -> &ZConfiguration {
        &self.trace[0]
    }

    pub fn end(&self) -> &ZConfiguration {
        self.trace.last().expect("trace never empty")
    }
}
