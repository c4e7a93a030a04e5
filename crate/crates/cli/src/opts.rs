//! Argument surface. Configuration literals are plain strings here; they
//! are resolved against the loaded system by the handlers, because state
//! names and counter counts are not known at parse time.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Parser, Debug)]
#[command(
    name = "vasskit",
    version,
    about = "Analyses for vector addition systems with states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Node budget for searches; exhausting it ends inconclusive (exit 3).
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub budget: u64,

    /// Override the derived run-length cap (decimal integer).
    #[arg(long, global = true)]
    pub cap: Option<BigInt>,

    /// Emit the machine-readable rendering instead of the pretty one.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for the generation commands.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Geometric and per-component dimensions of a system.
    Dim { file: PathBuf },

    /// Can a run from --source reach a configuration covering --target?
    Cover {
        file: PathBuf,
        /// Source configuration, `state:v1,v2,...`.
        #[arg(long)]
        source: String,
        /// Covering target, `state:v1,v2,...`.
        #[arg(long)]
        target: String,
    },

    /// Is the reachable set from --source finite?
    Bounded {
        file: PathBuf,
        #[arg(long)]
        source: String,
    },

    /// Simultaneous covering: can a run reach --state with every counter
    /// at least --G?
    Simub {
        file: PathBuf,
        #[arg(long)]
        source: String,
        /// Target state, by name.
        #[arg(long)]
        state: String,
        /// Uniform threshold each counter must reach.
        #[arg(long = "G", default_value = "1")]
        threshold: BigInt,
    },

    /// Check the no-pump property: whenever some state is reachable with
    /// every counter large, that state is uniformly coverable within the
    /// derived length bound.
    Nopump {
        file: PathBuf,
        #[arg(long)]
        source: String,
        #[arg(long = "G", default_value = "1")]
        threshold: BigInt,
    },

    /// Reachability when counters may go negative.
    Zreach {
        file: PathBuf,
        /// Source, `state:v1,v2,...`; values may be negative.
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Also search for a shortest run and report its length.
        #[arg(long)]
        shortest: bool,
    },

    /// Evaluate the witness-length recurrences for given parameters.
    Bounds {
        /// Number of counters.
        #[arg(long)]
        d: usize,
        /// Number of states.
        #[arg(long)]
        n: usize,
        /// Largest absolute transition-effect entry.
        #[arg(long = "M")]
        m: BigInt,
        /// Geometric dimension.
        #[arg(long)]
        g: usize,
        /// Max-norm of the covering target.
        #[arg(long, default_value = "0")]
        ynorm: BigInt,
        /// Uniform covering threshold.
        #[arg(long = "G", default_value = "0")]
        threshold: BigInt,
        #[arg(long, value_enum, default_value_t = Table::Cover)]
        table: Table,
    },

    /// Classify a counter vector against the system's cycle space.
    Classify {
        file: PathBuf,
        /// Vector to classify, `v1,v2,...`.
        #[arg(long)]
        v: String,
        /// Single smallness threshold.
        #[arg(long = "C")]
        c: Option<BigInt>,
        /// Graded thresholds, ascending, one per dimension of the space.
        #[arg(long = "Cvec", value_delimiter = ',')]
        cvec: Option<Vec<BigInt>>,
    },

    /// Independent brute-force oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },

    /// Compile hardness gadgets and report their dimension profile.
    Gadget {
        #[command(subcommand)]
        which: GadgetCmd,
    },

    /// Generate a reproducible corpus of random systems.
    Gen {
        /// Output directory; created if missing.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        states: usize,
        #[arg(long, default_value_t = 5)]
        trans: usize,
        #[arg(long = "M", default_value_t = 2)]
        m: i64,
        /// Keep only instances whose per-component dimension equals this.
        #[arg(long)]
        require_gscc: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Table {
    Cover,
    Uniform,
    Selfcover,
    All,
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Exhaustive forward search below a value ceiling.
    Bfs {
        file: PathBuf,
        #[arg(long)]
        source: String,
        /// Per-counter value ceiling; configurations above it are cut.
        #[arg(long = "box", default_value = "64")]
        ceiling: BigInt,
        /// Depth limit in steps.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Backward coverability: minimal covering sources per state.
    Backward {
        file: PathBuf,
        #[arg(long)]
        target: String,
        /// Also answer whether this source covers the target.
        #[arg(long)]
        source: Option<String>,
    },
    /// Karp–Miller tree and the boundedness verdict it certifies.
    Km {
        file: PathBuf,
        #[arg(long)]
        source: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GadgetCmd {
    /// A single zero-test block with a configurable guard count.
    Ztest {
        #[arg(long, default_value_t = 2)]
        guards: usize,
        /// Write the compiled system to this path in the canonical format.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// One squaring stage: doubles the exponent of the carried bound.
    Amplifier {
        #[arg(long, default_value_t = 1)]
        stage: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Single-triple variant kept as a negative control: its one big loop
    /// drives the peak component rank to five.
    OldAmplifier {
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Full chain: seed block, squaring stages, machine block, drains.
    Tower {
        #[arg(long, default_value_t = 1)]
        height: usize,
        /// Initial bound loaded by the seed block.
        #[arg(long, default_value_t = 4)]
        bound: u64,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}
