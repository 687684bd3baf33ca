use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gdof::cli::{run, Cli, RunConfig, EXIT_INVALID, SEED_ENV};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let env_seed = std::env::var(SEED_ENV).ok();
    let result = RunConfig::resolve(&cli, env_seed.as_deref()).and_then(|cfg| run(&cfg));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_INVALID as u8);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
