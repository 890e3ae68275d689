use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qpol_cli::{run, Cli};

fn main() -> ExitCode {
    // help and version go through clap's own exit path (code 0);
    // usage errors exit 2
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            if std::io::stdout().lock().write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qpol: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
