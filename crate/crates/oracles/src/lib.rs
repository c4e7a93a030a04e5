//! Independent ground-truth engines for cross-checking the deciders.
//!
//! Everything here is deliberately naive — exhaustive breadth-first search,
//! textbook backward coverability, and the classical Karp–Miller tree with
//! no pruning beyond the definitions. When a decider and an oracle
//! disagree, the bug is almost always on the clever side.

mod backward;
mod bfs;
mod km;

use thiserror::Error;

pub use backward::{backward_coverability, backward_coverability_budgeted, UpwardBasis};
pub use bfs::{bfs_reach, BfsReach};
pub use km::{
    karp_miller, karp_miller_budgeted, KarpMillerTree, KmNode, OmegaConfiguration, OmegaValue,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle exceeded its node budget of {budget}")]
    BudgetExceeded { budget: u64 },
}
