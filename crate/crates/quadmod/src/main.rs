use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "quadmod", about = "Exact calculus of quadratic maps between modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session file and print its report.
    Run {
        /// Path to the session file.
        file: std::path::PathBuf,
        /// Default seed for randomized property checks (a `seed` statement
        /// in the file takes precedence from that point on).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Echo statements to stderr while executing.
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            file,
            seed,
            verbose,
        } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {}", file.display(), e);
                    return ExitCode::from(2);
                }
            };
            if verbose {
                for line in text.lines() {
                    let stripped = line.split('#').next().unwrap_or("").trim();
                    if !stripped.is_empty() {
                        eprintln!("> {}", stripped);
                    }
                }
            }
            match quadmod::session::run_session_with_seed(&text, seed) {
                Ok(report) => {
                    print!("{}", quadmod::session::emit_report(&report));
                    if report.ok() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    ExitCode::from(2)
                }
            }
        }
    }
}
