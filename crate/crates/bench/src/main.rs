use std::io::{self, ErrorKind};
use std::process::ExitCode;

use clap::Parser;
use neatsort_bench::cli::{run, Cli};
use neatsort_bench::BenchError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli, &mut io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(BenchError::Io { source, .. }) if source.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
