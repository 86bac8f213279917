//! `distortion`: batch runs that print certificates and series as JSON or
//! CSV. Identical arguments give byte-identical output.
//!
//! Exit codes: 0 success, 1 bad input or other failure, 2 a certificate did
//! not verify, 3 arithmetic overflow, 4 node cap exceeded (partial stats are
//! still written), 5 unknown group, lift, curve or arc name.
#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

mod commands;
mod error;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use distortion_core::growth::EgrConfig;
use distortion_core::words::{BfsOptions, FrontierOrder};

use error::CliError;
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "distortion", version, about = "Distortion certificates, word metrics, rotation and growth experiments")]
struct Cli {
    /// Output format; defaults to json for distortion, cayley, calegari and
    /// psl2-embed, csv otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for parallel kernels. Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest Cayley ball to store.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    node_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certificates for |fᵐ| and the ratio series tokens/m with its envelope.
    Distortion {
        /// mess, heis or psl2sqrt2
        group: String,
        #[arg(long)]
        n_max: u64,
    },
    /// Sphere and ball sizes of the Cayley ball, and optionally the exact
    /// length of one element.
    Cayley {
        /// mess, heis or psl2sqrt2
        group: String,
        #[arg(long)]
        radius: u32,
        /// Canonical key, e.g. "0,0,1" for heis or "0,3,0" for mess.
        #[arg(long)]
        target: Option<String>,
    },
    /// Rotation vector (Fⁿ(x) − x)/n of a named lift.
    Rotation {
        #[arg(long)]
        lift: String,
        /// Comma-separated lift parameters.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Exponential growth rate log(length)/n of a closed curve.
    Egr {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        param: String,
        /// e1, e2 or diag
        #[arg(long)]
        curve: String,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 1e-2)]
        max_seg: f64,
        #[arg(long, default_value_t = 1e12)]
        length_cap: f64,
    },
    /// Spread L(fⁿα)/n of an arc in the strip.
    Spread {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        param: String,
        /// vertical or slanted
        #[arg(long)]
        arc: String,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 1e-2)]
        max_seg: f64,
    },
    /// Checks [G,H] = F and compatibility with (x,y) ~ (x+α,y), and the
    /// rotation number of F on a fiber.
    Calegari {
        #[arg(long, default_value_t = std::f64::consts::SQRT_2)]
        alpha: f64,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
    },
    /// ψ(g) = (g, ḡ) for a word in a, b (A, B for inverses), or for the
    /// certificate element Bᵐ with --n.
    Psl2Embed {
        #[arg(long, conflicts_with = "n")]
        word: Option<String>,
        #[arg(long)]
        n: Option<u64>,
    },
}

fn run(cli: &Cli) -> Result<(Report, Format), CliError> {
    let json_default = matches!(
        cli.command,
        Command::Distortion { .. } | Command::Cayley { .. } | Command::Calegari { .. } | Command::Psl2Embed { .. }
    );
    let format = cli.format.unwrap_or(if json_default { Format::Json } else { Format::Csv });
    let report = match &cli.command {
        Command::Distortion { group, n_max } => commands::distortion(commands::parse_group(group)?, *n_max)?,
        Command::Cayley { group, radius, target } => {
            let opts = BfsOptions { node_cap: cli.node_cap, threads: cli.threads, order: FrontierOrder::Sorted };
            match commands::cayley(commands::parse_group(group)?, *radius, target.as_deref(), &opts) {
                Err(CliError::BallTooLarge { message, partial }) => {
                    emit(cli, &partial.render(format))?;
                    return Err(CliError::BallTooLarge { message, partial });
                }
                other => other?,
            }
        }
        Command::Rotation { lift, param, x, n, tol } => {
            commands::rotation(lift, &commands::parse_decimals(param)?, commands::parse_point(x)?, *n, *tol)?
        }
        Command::Egr { map, param, curve, n_max, max_seg, length_cap } => {
            let cfg = EgrConfig { max_seg: *max_seg, length_cap: *length_cap };
            commands::egr_cmd(map, &commands::parse_decimals(param)?, curve, *n_max, &cfg)?
        }
        Command::Spread { map, param, arc, n_max, max_seg } => {
            commands::spread_cmd(map, &commands::parse_decimals(param)?, arc, *n_max, *max_seg)?
        }
        Command::Calegari { alpha, n } => commands::calegari(*alpha, *n)?,
        Command::Psl2Embed { word, n } => {
            let w = match (word, n) {
                (Some(w), _) => commands::parse_psl2_word(w)?,
                (None, Some(n)) => distortion_core::groups::psl2_certificate(*n)?.word,
                (None, None) => return Err(CliError::invalid("give --word or --n")),
            };
            commands::psl2_embed(&w)?
        }
    };
    Ok((report, format))
}

fn emit(cli: &Cli, bytes: &[u8]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Failed { name: "Io".into(), message: e.to_string() };
    match &cli.out {
        Some(path) => fs::write(path, bytes).map_err(io),
        None => std::io::stdout().write_all(bytes).map_err(io),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error[InvalidArgument]: --threads must be positive");
            return ExitCode::from(1);
        }
        // ignore failure: the global pool may already exist
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let result = run(&cli).and_then(|(report, format)| emit(&cli, &report.render(format)));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {}", e.name(), e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
