//! `trestle`: decide, build and verify k-trestles in squares of graphs.
//!
//! Exit codes: 0 success or feasible, 1 negative verdict (infeasible,
//! obstruction found, certificate rejected, disagreement), 2 usage or
//! input error, 3 internal invariant violation or exhausted search.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use trestle::Error;

/// How a command finished, mapped onto the process exit code.
pub enum Outcome {
    Ok,
    Verdict,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Verdict) => ExitCode::from(1),
        Err(e) => {
            eprintln!("trestle: {e}");
            ExitCode::from(match e {
                Error::Invariant(_) | Error::Exhausted(_) => 3,
                _ => 2,
            })
        }
    }
}
