//! Counter programs and the gadget compiler.
//!
//! A *counter program* is a structured description of a VASS: a list of
//! counters, straight-line additions, nondeterministic `loop { .. }` blocks,
//! and zero tests backed by *multiplication triples*.  A triple consists of
//! three counters `(b, c, d)` together with the set of counters it guards.
//! Loading the triple with `b = B`, `c = C`, `d = B * C` buys `C / 2` zero
//! tests on guard counters whose combined value never exceeds `B`: the
//! sensor `d` can reach zero exactly when that many tests were taken and
//! every one of them saw a zero.
//!
//! [`compile`] lowers a program to a [`vasskit_core::Vass`] together with
//! enough metadata to script honest runs and to audit the structural
//! invariants the constructions rely on.  On top of the compiler sit the
//! stage amplifier ([`make_amplifier`]), its weaker historical variant
//! ([`make_old_amplifier`]), and the assembled tower instances
//! ([`build_tower_instance`]) whose geometric dimension stays at four while
//! the counter values they certify grow as a tower of exponentials.

mod amplifier;
mod compile;
mod program;
mod tower;

pub use amplifier::{
    compile_old_amplifier, compile_stage, make_amplifier, make_old_amplifier, mult_block,
    AmplifierIo, OldAmplifierIo, MULT_FACTOR, OLD_MULT_FACTOR,
};
pub use compile::{
    compile, compile_with_universe, CompiledGadget, CompiledTriple, LoopSpec, WalkItem,
    ZeroTestSite,
};
pub use program::{parse_program, render_program, CounterProgram, Instruction, MultiplicationTriple};
pub use tower::{build_tower_instance, trivial_machine, TowerInstance, MAX_TOWER_HEIGHT};

use thiserror::Error;

/// Everything that can go wrong while building, parsing, or compiling a
/// counter program.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("counter {0:?} is declared twice")]
    DuplicateCounter(String),
    #[error("counter {0:?} is not declared")]
    UndeclaredCounter(String),
    #[error("no multiplication triple has bound counter {0:?}")]
    UnknownTriple(String),
    #[error("zero test on {counter:?}, which triple {triple:?} does not guard")]
    UntestableCounter { counter: String, triple: String },
    #[error("counter {0:?} belongs to more than one multiplication triple")]
    OverlappingTriples(String),
    #[error("direct update of {counter:?} cannot be compensated: it is the {role} counter of a triple")]
    UnbalancedUpdate { counter: String, role: &'static str },
    #[error("mirror copy {0:?} may not be updated directly")]
    MirroredCounter(String),
    #[error("mirror pair ({orig:?}, {copy:?}) is malformed: {why}")]
    BadMirror {
        orig: String,
        copy: String,
        why: &'static str,
    },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("`loop` on line {0} is never closed")]
    UnclosedLoop(usize),
    #[error("`end` on line {0} matches no open loop")]
    StrayEnd(usize),
    #[error("counter name {0:?} is used by two different roles of the construction")]
    NameCollision(String),
    #[error("tower machine {0}")]
    MachineShape(&'static str),
    #[error("seed bound {0} is outside the supported range 1..=16")]
    SeedRange(u64),
    #[error("tower height {n} is outside the supported range 1..={max}; taller instances exceed the resource ceiling", max = MAX_TOWER_HEIGHT)]
    TowerHeight { n: usize },
}
