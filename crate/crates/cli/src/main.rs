mod algebra;
mod jb;
mod report;
mod schemes;
mod selfcheck;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{CliError, CmdResult, Format};

/// Degree-like requests above this are refused unless `JBKIT_MAX_DEGREE` raises it.
const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Parser)]
#[command(
    name = "jbkit",
    version,
    about = "Exact Bernoulli, BCH, Jacobi–Bernoulli and deformation computations"
)]
struct Cli {
    /// Output format; defaults to text for `bernoulli` and `selfcheck`, JSON otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of Bernoulli numbers B_0..B_max.
    Bernoulli {
        #[arg(long)]
        max: usize,
    },
    /// Graded BCH components as Lyndon-basis words.
    Bch {
        #[arg(long)]
        max_degree: usize,
        /// Trigraded components of log(e^X e^Y e^Z) instead.
        #[arg(long)]
        tri: bool,
    },
    /// Jacobi–Bernoulli complex of a semi-simplicial Lie algebra.
    Jb {
        #[command(subcommand)]
        command: JbCommand,
    },
    /// dim A/(f, ∂f).
    Milnor {
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        poly: String,
    },
    /// Tangent complex of a hypersurface.
    TangentDgla {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        vars: Option<String>,
        /// Also report ranks of the differentials on polynomials of degree ≤ D.
        #[arg(long, value_name = "D")]
        truncate: Option<u32>,
    },
    Deform {
        #[command(subcommand)]
        command: DeformCommand,
    },
    Resolution {
        #[command(subcommand)]
        command: ResolutionCommand,
    },
    /// Run the bundled acceptance corpus.
    Selfcheck {
        /// Run only these suites (repeatable).
        #[arg(long)]
        suite: Vec<String>,
        /// Replace the bundled SELA fixture.
        #[arg(long)]
        sela: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct JbArgs {
    /// SELA file.
    #[arg(long)]
    sela: PathBuf,
    /// Degree window of J, as LO:HI.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(i32, i32)>,
    /// Longest symmetric monomial kept (default N − 1).
    #[arg(long)]
    sym_cap: Option<usize>,
}

#[derive(Subcommand)]
enum JbCommand {
    /// d² = 0, filtration and F₁ checks.
    Check {
        #[command(flatten)]
        args: JbArgs,
    },
    /// H^j(J) together with the layer decomposition.
    Cohomology {
        #[command(flatten)]
        args: JbArgs,
        #[arg(long, allow_hyphen_values = true)]
        degree: i32,
    },
    /// Check descent data against the Maurer–Cartan equation.
    Cocycle {
        #[command(flatten)]
        args: JbArgs,
        #[arg(long)]
        data: PathBuf,
    },
    /// Obstruction to lifting descent data one order.
    Obstruct {
        #[arg(long)]
        sela: PathBuf,
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        from_order: usize,
        #[arg(long)]
        to_order: usize,
    },
    /// Print a built-in SELA as JSON.
    Example {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum DeformCommand {
    /// Lift f + t·g order by order.
    Lift {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        direction: String,
        #[arg(long)]
        to_order: usize,
        #[arg(long, default_value_t = 2)]
        from_order: usize,
        #[arg(long)]
        vars: Option<String>,
    },
}

#[derive(Subcommand)]
enum ResolutionCommand {
    /// Verify a complex given as JSON.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
}

fn parse_window(s: &str) -> Result<(i32, i32), String> {
    let (a, b) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo = a.trim().parse::<i32>().map_err(|e| e.to_string())?;
    let hi = b.trim().parse::<i32>().map_err(|e| e.to_string())?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn max_degree() -> Result<usize, CliError> {
    match std::env::var("JBKIT_MAX_DEGREE") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "JBKIT_MAX_DEGREE must be a positive integer, got {v:?}"
                ))
            }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn capped(what: &str, n: usize) -> Result<(), CliError> {
    let cap = max_degree()?;
    if n > cap {
        return Err(CliError::Usage(format!(
            "{what} = {n} exceeds the degree cap {cap} (set JBKIT_MAX_DEGREE to raise it)"
        )));
    }
    Ok(())
}

fn positive(what: &str, n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage(format!("{what} must be positive")));
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> (CmdResult, Format) {
    let default = match cli.command {
        Command::Bernoulli { .. } | Command::Selfcheck { .. } => Format::Text,
        _ => Format::Json,
    };
    let format = cli.format.unwrap_or(default);
    let r = (|| match &cli.command {
        Command::Bernoulli { max } => algebra::bernoulli_table(*max),
        Command::Bch { max_degree, tri } => {
            positive("--max-degree", *max_degree)?;
            capped("--max-degree", *max_degree)?;
            algebra::bch_table(*max_degree, *tri)
        }
        Command::Jb { command } => match command {
            JbCommand::Check { args } => {
                jb::check(&args.sela, &jb::config(args.window, args.sym_cap))
            }
            JbCommand::Cohomology { args, degree } => {
                jb::cohomology(&args.sela, *degree, &jb::config(args.window, args.sym_cap))
            }
            JbCommand::Cocycle { args, data } => {
                jb::cocycle(&args.sela, data, &jb::config(args.window, args.sym_cap))
            }
            JbCommand::Obstruct {
                sela,
                data,
                from_order,
                to_order,
            } => {
                capped("--to-order", *to_order)?;
                jb::obstruct(sela, data, *from_order, *to_order)
            }
            JbCommand::Example { name, order } => {
                positive("--order", *order)?;
                capped("--order", *order)?;
                jb::example(name, *order)
            }
        },
        Command::Milnor { vars, poly } => schemes::milnor(vars.as_deref(), poly),
        Command::TangentDgla {
            poly,
            vars,
            truncate,
        } => {
            if let Some(d) = truncate {
                capped("--truncate", *d as usize)?;
            }
            schemes::tangent(vars.as_deref(), poly, *truncate)
        }
        Command::Deform {
            command:
                DeformCommand::Lift {
                    poly,
                    direction,
                    to_order,
                    from_order,
                    vars,
                },
        } => {
            capped("--to-order", *to_order)?;
            schemes::deform_lift(vars.as_deref(), poly, direction, *from_order, *to_order)
        }
        Command::Resolution {
            command: ResolutionCommand::Check { file },
        } => schemes::resolution_check(file),
        Command::Selfcheck { suite, sela } => selfcheck::run(suite, sela.as_deref(), cli.seed),
    })();
    (r, format)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (r, format) = dispatch(&cli);
    match r {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(format).as_bytes());
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("jbkit: {}", e.message());
            if let CliError::Usage(_) = e {
                eprintln!("usage: jbkit [--format json|text] [--seed N] <COMMAND> ...; see `jbkit --help`");
            }
            ExitCode::from(e.code() as u8)
        }
    }
}
