use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use abs_extremal::extremal::AuditFamily;
use abs_extremal::Theorem;
use abs_extremal_cli::{
    audit, compute, construct, lemmas, verify, CliError, Family, FamilyParams, Format, OrderRange,
    Output, SweepConfig,
};
use clap::{Parser, Subcommand};

/// ABS index calculator and extremal-graph verifier.
#[derive(Parser, Debug)]
#[command(name = "absx", version)]
struct Cli {
    /// Table format: csv or markdown.
    #[arg(long, global = true, default_value = "csv")]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index, invariants and per-edge contributions of a graph6 graph
    /// (read from standard input when no argument is given).
    Compute { graph6: Option<String> },

    /// Build one of the extremal families: turan, split, star, dstar, kite.
    Construct {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        chi: Option<usize>,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// Degree of the first centre of a double star.
        #[arg(long)]
        m: Option<usize>,
        /// Also print the printed-versus-direct formula audit.
        #[arg(long)]
        audit: bool,
    },

    /// Exhaustive search over connected graphs, checking each extremal
    /// characterisation.
    Verify {
        /// Comma-separated subset of T1, T2, T3.
        #[arg(long, value_delimiter = ',', default_value = "T1,T2,T3")]
        theorems: Vec<Theorem>,
        /// Order range, e.g. 5..7.
        #[arg(long, default_value = "5..7")]
        n: OrderRange,
        #[arg(long, env = "ABSX_WORKERS")]
        workers: Option<usize>,
        /// Allow order 8.
        #[arg(long = "enable-n8")]
        enable_n8: bool,
        /// Append the formula audit for the same orders.
        #[arg(long)]
        audit: bool,
    },

    /// Printed closed-form maxima against direct evaluation.
    Audit {
        /// Comma-separated families: chromatic, independence, pendant,
        /// pendant-clique-term.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "chromatic,independence,pendant,pendant-clique-term"
        )]
        cases: Vec<AuditFamily>,
        #[arg(long, default_value = "5..7")]
        n: OrderRange,
    },

    /// Finite-difference checks of the scalar lemmas and the exhaustive
    /// edge-addition check.
    Lemmas {
        /// Orders for the edge-addition check.
        #[arg(long, default_value = "1..6")]
        n: OrderRange,
        #[arg(long, env = "ABSX_WORKERS")]
        workers: Option<usize>,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Compute { graph6 } => {
            let text = match graph6 {
                Some(s) => s,
                None => {
                    let mut stdin = std::io::stdin();
                    if stdin.is_terminal() {
                        return Err(CliError::Usage("no graph6 input given".into()));
                    }
                    let mut s = String::new();
                    stdin.read_to_string(&mut s)?;
                    s
                }
            };
            compute(&text, format)
        }
        Command::Construct {
            family,
            n,
            chi,
            alpha,
            p,
            m,
            audit,
        } => {
            let params = FamilyParams {
                n,
                chi,
                alpha,
                p,
                m,
            };
            construct(family, params, audit, format)
        }
        Command::Verify {
            theorems,
            n,
            workers,
            enable_n8,
            audit,
        } => verify(&SweepConfig {
            orders: n,
            theorems,
            format,
            workers: workers.unwrap_or_else(default_workers),
            allow_order_8: enable_n8,
            include_audit: audit,
        }),
        Command::Audit { cases, n } => audit(&cases, n, format),
        Command::Lemmas { n, workers } => {
            lemmas(n, workers.unwrap_or_else(default_workers), format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("absx: error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = match out_path {
        Some(path) => std::fs::write(&path, &output.text),
        None => std::io::stdout().lock().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("absx: error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(output.exit_code())
}
