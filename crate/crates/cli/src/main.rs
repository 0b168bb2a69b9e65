mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use exlab_core::Error;

use args::Cli;
use commands::Failure;

const EXIT_VERDICT: u8 = 2;
const EXIT_ERROR: u8 = 1;
const EXIT_USAGE: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("exlab: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }

    let start = Instant::now();
    let mut run = match commands::dispatch(&cli.command, &cli.global) {
        Ok(run) => run,
        Err(Failure::Usage(msg)) => {
            eprintln!("exlab: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Core(e)) => {
            eprintln!("exlab: {e}");
            return match e {
                Error::Protocol(_) => ExitCode::from(EXIT_VERDICT),
                _ => ExitCode::from(EXIT_ERROR),
            };
        }
    };
    run.report.wall_ms = start.elapsed().as_millis();

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let written = if cli.global.json {
        writeln!(out, "{}", run.report.to_json(&run.output))
    } else {
        out.write_all(run.output.as_bytes())
            .and_then(|_| out.flush())
            .map(|_| eprint!("{}", run.report.to_text()))
    };
    if let Err(e) = written {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("exlab: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }

    if run.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERDICT)
    }
}
