use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised while reading the `vass` text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `vass <name>` header first")]
    MissingHeader { line: usize },
    #[error("line {line}: unknown directive `{directive}`")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: duplicate `vass` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: `{directive}` takes {want} argument(s), got {got}")]
    BadArity {
        line: usize,
        directive: String,
        want: usize,
        got: usize,
    },
    #[error("line {line}: duplicate `dim` declaration")]
    DuplicateDim { line: usize },
    #[error("line {line}: `{directive}` before `dim`")]
    BeforeDim { line: usize, directive: String },
    #[error("line {line}: invalid number `{token}`")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: duplicate state `{state}`")]
    DuplicateState { line: usize, state: String },
    #[error("line {line}: undeclared state `{state}`")]
    UndeclaredState { line: usize, state: String },
    #[error("line {line}: effect arity {got} ≠ dim {want}")]
    EffectArity { line: usize, got: usize, want: usize },
    #[error("missing `dim` declaration")]
    MissingDim,
}

/// Errors raised by run semantics and structural operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("transition index {t} out of range ({len} transitions)")]
    NoSuchTransition { t: usize, len: usize },
    #[error("state index {state} out of range ({len} states)")]
    NoSuchState { state: usize, len: usize },
    #[error("counter index {counter} out of range (dimension {dim})")]
    NoSuchCounter { counter: usize, dim: usize },
    #[error("transition {t} starts at `{expected}` but the configuration is at `{found}`")]
    StateMismatch {
        t: usize,
        expected: String,
        found: String,
    },
    #[error("steps {earlier} and {later} do not chain: `{expected}` ≠ `{found}`")]
    DisconnectedSteps {
        earlier: usize,
        later: usize,
        expected: String,
        found: String,
    },
    #[error("counter {counter} underflows to {value} on transition {t}")]
    Underflow {
        t: usize,
        counter: usize,
        value: BigInt,
    },
    #[error("configuration has {got} counters but the system has dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("counter {counter} of a configuration is negative ({value})")]
    NegativeCounter { counter: usize, value: BigInt },
}
