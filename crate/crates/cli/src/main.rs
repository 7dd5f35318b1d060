//! `g2mod`: command-line access to the genus-2 modular polynomial toolkit.
//!
//! Every command prints a JSON run report. Exit status is 0 when all checks
//! pass, 1 when a check fails, 2 for usage errors, 3 for invalid input and
//! 4 for precision failures.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "g2mod", version, about = "Genus-2 modular polynomial toolkit")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = g2mod::DEFAULT_PREC)]
    pub prec: u32,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Symplectic group and isotropic planes over F_p.
    #[command(subcommand)]
    Sp4(commands::sp4::Sp4Cmd),
    /// Action on the Siegel upper half-space.
    #[command(subcommand)]
    Siegel(commands::siegel::SiegelCmd),
    /// Truncated q-expansions.
    #[command(subcommand)]
    Qexp(commands::qexp::QexpCmd),
    /// Genus-2 curves and Igusa invariants.
    #[command(subcommand)]
    Curve(commands::curve::CurveCmd),
    /// Richelot (2,2)-isogenies.
    #[command(subcommand)]
    Richelot(commands::curve::RichelotCmd),
    /// Evaluated modular polynomials, L2 and degree detection.
    #[command(subcommand)]
    Modpoly(commands::modpoly::ModpolyCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(commands::verify::VerifyCmd),
}

impl Command {
    fn name(&self) -> String {
        let (group, sub) = match self {
            Self::Sp4(c) => ("sp4", c.name()),
            Self::Siegel(c) => ("siegel", c.name()),
            Self::Qexp(c) => ("qexp", c.name()),
            Self::Curve(c) => ("curve", c.name()),
            Self::Richelot(c) => ("richelot", c.name()),
            Self::Modpoly(c) => ("modpoly", c.name()),
            Self::Verify(c) => ("verify", c.name()),
        };
        format!("{group} {sub}")
    }

    fn run(&self, g: &Global) -> CliResult<report::Outcome> {
        match self {
            Self::Sp4(c) => c.run(g),
            Self::Siegel(c) => c.run(g),
            Self::Qexp(c) => c.run(g),
            Self::Curve(c) => c.run(g),
            Self::Richelot(c) => c.run(g),
            Self::Modpoly(c) => c.run(g),
            Self::Verify(c) => c.run(g),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}").map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let name = cli.command.name();
    let status = match cli.command.run(&cli.global) {
        Ok(outcome) => {
            let report = outcome.into_report(&name, cli.global.prec, started);
            let ok = report.checks.iter().all(|c| c.pass);
            let text = serde_json::to_string_pretty(&report).expect("report serialises");
            match emit(&text, cli.global.out.as_ref()) {
                Ok(()) if ok => 0,
                Ok(()) => 1,
                Err(e) => {
                    eprintln!("g2mod: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("g2mod: {e}");
            e.exit_code()
        }
    };
    std::process::exit(status);
}
