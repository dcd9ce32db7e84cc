use std::io::Write;
use std::process::ExitCode;

use descent::cli::{rank_cap, run, EXIT_USAGE, RANK_CAP_VAR};

fn main() -> ExitCode {
    let cap = match rank_cap(std::env::var(RANK_CAP_VAR).ok().as_deref()) {
        Ok(cap) => cap,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let outcome = run(std::env::args_os(), cap);
    std::io::stdout().write_all(outcome.stdout.as_bytes()).ok();
    std::io::stderr().write_all(outcome.stderr.as_bytes()).ok();
    ExitCode::from(outcome.code as u8)
}
