//! Core model for vector addition systems with states (VASS).
//!
//! A VASS is a finite automaton whose transitions additionally shift a vector
//! of `d` counters. Under the usual semantics counters may never go negative;
//! under integer semantics they may. This crate holds the data model, the
//! text format, run semantics, SCC structure, counter projection, and a
//! seeded instance sampler shared by the test corpora and the CLI.

mod config;
mod error;
pub mod gen;
mod model;
mod project;
mod run;
mod scc;

pub use config::{Configuration, ZConfiguration};
pub use error::{ParseError, SemanticsError};
pub use model::{parse_vass, StateId, Transition, Vass};
pub use project::project_counters;
pub use run::{path_effect, step, step_z, Run, Semantics};
pub use scc::{scc_decompose, SccDecomposition};
