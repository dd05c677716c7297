use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hurwitz_core::cli::{
    cmd_admissible, cmd_braid, cmd_charp, cmd_defdatum, cmd_group, cmd_hurwitz, cmd_tails,
    cmd_verify, render, HurwitzMode, OutputFormat, Report, RunConfig,
};
use hurwitz_core::{Error, Result};

/// Genus-0 Hurwitz numbers, braid orbits and their reduction in characteristic p.
///
/// Types are written `d:e1,e2,e3[,e4]` for single cycles, with a pair of
/// disjoint cycles written `e1-e2`, e.g. `5:2-2,4,4`.
#[derive(Parser, Debug)]
#[command(name = "hurwitz", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    format: OutputFormat,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hurwitz number from the closed formula, brute force, or both.
    Hurwitz {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, value_enum, default_value_t = HurwitzMode::Formula)]
        mode: HurwitzMode,
    },
    /// Braid orbits of a 4-point type.
    Braid {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// Admissible covers of a pure-cycle 4-point type, with the reduction census at p.
    Admissible {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long = "char", value_name = "P")]
        p: Option<usize>,
    },
    /// h, h_p, bad-reduction count and the degeneration flag.
    Charp {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Prime (default: the degree).
        p: Option<usize>,
    },
    /// Cartier coefficient c(λ) and supersingular parameters.
    Defdatum {
        p: u64,
        /// `a1,a2,a3,a4`
        exponents: String,
    },
    /// Tail-cover invariants for a class `e` or `e1-e2` in degree p.
    Tails { p: usize, class: String },
    /// Order, transitivity and cycle-type census of a generator file.
    Group {
        file: PathBuf,
        /// Allow the census for large groups.
        #[arg(long)]
        slow: bool,
    },
    /// Run the acceptance checks.
    Verify {
        /// Include the M23 census.
        #[arg(long)]
        slow: bool,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
    },
}

fn emit<R: Report>(report: &R, format: OutputFormat) -> Result<()> {
    print!("{}", render(report, format)?);
    Ok(())
}

/// Returns whether every assertion made by the command held.
fn run(cli: Cli) -> Result<bool> {
    let mut cfg = RunConfig {
        format: cli.format,
        threads: cli.threads,
        ..RunConfig::default()
    };
    cfg.validate()?;
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Precondition(e.to_string()))?;
        cfg.enumeration.parallel = n > 1;
    }
    let format = cfg.format;
    match cli.command {
        Command::Hurwitz { ty, mode } => {
            let r = cmd_hurwitz(&ty, mode, &cfg)?;
            emit(&r, format)?;
            Ok(r.agree != Some(false))
        }
        Command::Braid { ty } => emit(&cmd_braid(&ty, &cfg)?, format).map(|_| true),
        Command::Admissible { ty, p } => emit(&cmd_admissible(&ty, p)?, format).map(|_| true),
        Command::Charp { ty, p } => emit(&cmd_charp(&ty, p)?, format).map(|_| true),
        Command::Defdatum { p, exponents } => emit(&cmd_defdatum(p, &exponents)?, format).map(|_| true),
        Command::Tails { p, class } => emit(&cmd_tails(p, &class)?, format).map(|_| true),
        Command::Group { file, slow } => {
            cfg.slow = slow;
            let text = std::fs::read_to_string(&file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            emit(&cmd_group(&text, &cfg)?, format).map(|_| true)
        }
        Command::Verify { slow, only } => {
            cfg.slow = slow;
            let r = cmd_verify(only, &cfg)?;
            emit(&r, format)?;
            Ok(r.all_passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
