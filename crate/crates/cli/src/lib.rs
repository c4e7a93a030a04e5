//! Command-line front end. Every subcommand parses its inputs, calls one
//! library operation, and restates the outcome as a [`Report`]; no
//! analysis logic lives in this crate.

mod commands;
mod corpus;
mod literal;
mod opts;
mod report;

pub use opts::{Cli, Command, GadgetCmd, OracleCmd, Table};
pub use report::{digest, InputStamp, Report, Status};

use std::ffi::OsString;

use clap::Parser;

/// Parse `argv` and execute the selected subcommand. Usage errors (and
/// `--help`/`--version`) surface on the `Err` side so the binary can defer
/// to clap's printer and exit codes.
pub fn run(
    argv: impl IntoIterator<Item = impl Into<OsString>>,
) -> Result<Report, clap::Error> {
    let args: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let echo: String = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = Cli::try_parse_from(args.iter().cloned())?;
    let mut report = commands::dispatch(&cli, &echo);
    report.json = cli.json;
    Ok(report)
}
