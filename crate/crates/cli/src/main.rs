mod args;
mod cache;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use excited::factorial::FactorialCache;

use args::{Cli, Command, Format};
use cache::DiskCache;
use output::Report;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Lib(excited::Error),
}

impl From<excited::Error> for Failure {
    fn from(e: excited::Error) -> Self {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(s) => f.write_str(s),
            Failure::Lib(e) => e.fmt(f),
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let memo = FactorialCache::new();
    let disk = match &cli.cache {
        Some(dir) => Some(DiskCache::open(dir).map_err(|e| Failure::Usage(format!("cache: {e}")))?),
        None => None,
    };
    match &cli.command {
        Command::Eyd { ctx, pair, kind } => {
            let ctx = ctx.build()?;
            commands::eyd(&ctx, &pair.build(&ctx)?, *kind)
        }
        Command::Localize { ctx, pair, method } => {
            let ctx = ctx.build()?;
            commands::localize(&ctx, &pair.build(&ctx)?, *method, &memo, disk.as_ref())
        }
        Command::Mult { ctx, pair } => {
            let ctx = ctx.build()?;
            commands::mult(&ctx, &pair.build(&ctx)?)
        }
        Command::Giambelli { ctx, pair } => {
            let ctx = ctx.build()?;
            commands::giambelli(&ctx, &pair.build(&ctx)?)
        }
        Command::Paths {
            ctx,
            pair,
            kind,
            pfaffian,
        } => {
            let ctx = ctx.build()?;
            commands::paths(&ctx, &pair.build(&ctx)?, *kind, *pfaffian)
        }
        Command::Verify { ctx, suite } => {
            let ctx = ctx.build()?;
            commands::verify(&ctx, *suite, &memo, disk.as_ref())
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json)? + "\n",
        Format::Ascii => report.ascii.clone().unwrap_or_else(|| report.text.clone()),
        Format::Text => report.text.clone(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}
