use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("configuration has {got} counters, system has {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("state {state} out of range (system has {len} states)")]
    NoSuchState { state: usize, len: usize },
    #[error("cap must be nonnegative, got {cap}")]
    NegativeCap { cap: BigInt },
    #[error("uniform covering threshold must be nonnegative, got {value}")]
    NegativeThreshold { value: BigInt },
    /// The search ran out of its node budget before reaching a verdict.
    /// Deliberately distinct from a "no witness" answer.
    #[error("node budget of {budget} exhausted; result inconclusive")]
    BudgetExceeded { budget: u64 },
}
