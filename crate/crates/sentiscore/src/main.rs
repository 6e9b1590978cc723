use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use sentiscore::cli::{self, Cli};
use sentiscore::report;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli::run(&cli, &mut out) {
        Ok(()) => match out.flush() {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: writing output: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            if cli.json_errors() {
                let _ = out.write_all(report::render_error(&e).as_bytes());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
