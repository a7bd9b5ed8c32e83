use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use atiyah_kring::classify::{
    classify, correspondence_grid, express_in_generator, p1_classify, s_set_enumerate,
    s_set_symbolic, Chain,
};
use atiyah_kring::oracle::oracle_check;
use atiyah_kring::{IndecomposableBundle, TorsionContext};
use clap::{Parser, Subcommand, ValueEnum};

use crate::expr::parse_expression;
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChainArg {
    Even,
    Odd,
}

#[derive(Debug, Parser)]
#[command(
    name = "atiyah",
    version,
    about = "Grothendieck-ring calculator for degree-zero bundles on an elliptic curve"
)]
pub struct Cli {
    /// Order of the twisting line bundle L (0 = not torsion).
    #[arg(long, global = true, default_value_t = 0)]
    torsion: u64,
    /// Largest |m| used when enumerating tensor powers.
    #[arg(long, global = true, default_value_t = 6)]
    bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose a bundle expression into indecomposables.
    Tensor { expression: String },
    /// Decompose a signed tensor power of an expression.
    #[command(allow_negative_numbers = true)]
    Power { expression: String, exponent: i64 },
    /// Describe S(L ⊗ F_r) and enumerate it up to --bound.
    Sset {
        #[arg(long)]
        rank: u32,
    },
    /// Classify L ⊗ F_r: R(E), Krull dimension, trivializing group.
    Classify {
        #[arg(long)]
        rank: u32,
    },
    /// Write [F_i] as a polynomial in [F_2] (even chain) or [F_3] (odd chain).
    Express {
        index: u32,
        #[arg(long, value_enum, default_value_t = ChainArg::Even)]
        chain: ChainArg,
    },
    /// Compare the multiplication rule with the character oracle for all s <= r <= rmax.
    Verify {
        #[arg(long, default_value_t = 12)]
        rmax: u32,
    },
    /// Check dim R(E) = dim G over [1, rmax] x [0, nmax].
    Grid {
        #[arg(long, default_value_t = 10)]
        rmax: u32,
        #[arg(long, default_value_t = 12)]
        nmax: u64,
    },
    /// Classify O(d_1) + ... + O(d_k) on the projective line.
    #[command(allow_negative_numbers = true)]
    P1 {
        #[arg(required = true)]
        degrees: Vec<i64>,
    },
}

struct Rendered {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Rendered {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Self {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl From<atiyah_kring::Error> for Failure {
    fn from(err: atiyah_kring::Error) -> Self {
        match err {
            atiyah_kring::Error::ZeroIndex
            | atiyah_kring::Error::EvenIndexInOddChain(_)
            | atiyah_kring::Error::EmptyDegrees => Failure::Usage(err.to_string()),
            _ => Failure::Computation(err.to_string()),
        }
    }
}

fn execute(cli: &Cli) -> Result<Rendered, Failure> {
    let ctx = TorsionContext::new(cli.torsion);
    match &cli.command {
        Command::Tensor { expression } => {
            let expr = parse_expression(expression).map_err(|e| Failure::Usage(e.to_string()))?;
            let value = expr.evaluate(ctx)?;
            Ok(Rendered::ok(value.to_string(), render::bundle_json(&value)))
        }
        Command::Power {
            expression,
            exponent,
        } => {
            let expr = parse_expression(expression).map_err(|e| Failure::Usage(e.to_string()))?;
            let value = expr.evaluate(ctx)?.tensor_power(*exponent)?;
            Ok(Rendered::ok(value.to_string(), render::bundle_json(&value)))
        }
        Command::Sset { rank } => {
            let symbolic = s_set_symbolic(*rank, cli.torsion)?;
            let enumerated: Vec<IndecomposableBundle> =
                s_set_enumerate(*rank, cli.torsion, cli.bound)?
                    .into_iter()
                    .collect();
            Ok(Rendered::ok(
                render::sset_text(cli.bound, &symbolic, &enumerated),
                render::sset_json(*rank, cli.torsion, cli.bound, &symbolic, &enumerated),
            ))
        }
        Command::Classify { rank } => {
            let report = classify(*rank, cli.torsion)?;
            Ok(Rendered::ok(
                render::report_text(&report),
                render::report_json(&report),
            ))
        }
        Command::Express { index, chain } => {
            let chain = match chain {
                ChainArg::Even => Chain::Even,
                ChainArg::Odd => Chain::Odd,
            };
            let poly = express_in_generator(*index, chain)?;
            Ok(Rendered::ok(
                format!("[F_{index}] = {poly}, x = [F_{}]", chain.generator()),
                render::express_json(*index, chain.generator(), &poly),
            ))
        }
        Command::Verify { rmax } => {
            let mut pairs = 0;
            let mut failures = Vec::new();
            for r in 1..=*rmax {
                for s in 1..=r {
                    pairs += 1;
                    let check = oracle_check(
                        IndecomposableBundle::atiyah(ctx, r)?,
                        IndecomposableBundle::atiyah(ctx, s)?,
                    )?;
                    if !check.agrees {
                        failures.push(check);
                    }
                }
            }
            Ok(Rendered {
                text: render::verify_text(pairs, &failures),
                json: render::verify_json(pairs, &failures),
                code: if failures.is_empty() {
                    EXIT_OK
                } else {
                    EXIT_COMPUTATION
                },
            })
        }
        Command::Grid { rmax, nmax } => {
            let rows = correspondence_grid(*rmax, *nmax)?;
            let code = if rows.iter().all(|r| r.holds) {
                EXIT_OK
            } else {
                EXIT_COMPUTATION
            };
            Ok(Rendered {
                text: render::grid_text(&rows),
                json: render::grid_json(&rows),
                code,
            })
        }
        Command::P1 { degrees } => {
            let report = p1_classify(degrees)?;
            Ok(Rendered::ok(
                render::report_text(&report),
                render::report_json(&report),
            ))
        }
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let rendered = match execute(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Computation(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_COMPUTATION;
        }
    };
    let body = match cli.format {
        Format::Text => rendered.text,
        Format::Json => {
            serde_json::to_string_pretty(&rendered.json).expect("json values serialize")
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, format!("{body}\n")),
        None => writeln!(out, "{body}"),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    rendered.code
}
