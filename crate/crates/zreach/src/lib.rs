//! Integer-semantics reachability.
//!
//! Over ℤ a run from `s` to `t` exists exactly when some multiset of
//! transitions balances flow at every state (Euler-path style), sums its
//! effects to `t − s`, and has connected support; the counters never
//! constrain anything because they may dip below zero freely. [`flow`]
//! decides this by enumerating connected supports and solving one small
//! integer program per support, then rebuilds an explicit run with an
//! Euler walk. [`shortest`] finds genuinely shortest runs by plain
//! breadth-first search, which the flow route is cross-checked against.

mod flow;
mod shortest;

pub use flow::{decide_zreach, euler_walk, find_flow, FlowSolution, SUPPORT_LIMIT};
pub use shortest::{run_length_base, shortest_zrun, within_ratio};

use num_bigint::BigInt;
use thiserror::Error;
use vasskit_core::{Vass, ZConfiguration};

/// An integer-semantics run; the trace may go negative.
pub type ZRun = vasskit_core::Run;

#[derive(Debug, Error)]
pub enum ZReachError {
    #[error("configuration has {got} counters, system has {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("state {state} out of range (system has {len} states)")]
    NoSuchState { state: usize, len: usize },
    #[error(
        "support enumeration over {count} transitions exceeds the limit of {limit}; \
         the subset sweep is exponential by design"
    )]
    TooManyTransitions { count: usize, limit: usize },
    #[error("budget of {budget} exhausted before the search settled")]
    BudgetExceeded { budget: u64 },
    #[error("multiplicity cap {cap} must be positive")]
    BadCap { cap: BigInt },
}

pub(crate) fn validate_z(vass: &Vass, c: &ZConfiguration) -> Result<(), ZReachError> {
    if c.state >= vass.states.len() {
        return Err(ZReachError::NoSuchState {
            state: c.state,
            len: vass.states.len(),
        });
    }
    if c.values.len() != vass.dim {
        return Err(ZReachError::DimensionMismatch {
            got: c.values.len(),
            want: vass.dim,
        });
    }
    Ok(())
}
