//! Exact rational linear algebra for VASS cycle spaces.
//!
//! The geometric dimension `g` of a system is the dimension of the vector
//! space spanned by the effects of its cycles; the SCC dimension `g_scc`
//! takes the maximum over single strongly connected components instead.
//! This crate computes both, constructs clean bases (bases whose projection
//! onto a distinguished coordinate set is the identity), classifies counter
//! vectors as small/large and thin/thick relative to such bases, and finds
//! small nonnegative solutions of integer linear systems.
//!
//! Everything here works over exact rationals; there is deliberately no
//! floating point, because rank decisions must never be approximate.

mod classify;
mod clean;
mod cycle;
mod error;
mod matrix;
mod solve;

pub use classify::{classify_small, classify_thin, greedy_distinguished, Classification, Verdict};
pub use clean::{clean_basis, rebase, CleanBasis};
pub use cycle::{cycle_space, geometric_dimension, scc_dimension, CertifiedGenerator, CycleSpace};
pub use error::GeometryError;
pub use matrix::RationalMatrix;
pub use solve::{small_solution_eq, small_solution_ineq, solve_ineq_unchecked, SolveOptions};
