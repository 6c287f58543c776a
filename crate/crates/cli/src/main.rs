use std::process::ExitCode;

use clap::Parser;
use equiangular_cli::args::Cli;
use equiangular_cli::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout();
    match equiangular_cli::run(&cli, &mut out) {
        Ok(status) => status.into(),
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.status().into()
        }
    }
}
