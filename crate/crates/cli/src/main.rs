//! `qknot`: q-rationals, braid-closure invariants, sweeps and table reports.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use qknot_core::braid::parse_braid;
use qknot_core::homfly::homfly;
use qknot_core::qnum::{left_qrational, parse_rational, qrational};
use qknot_core::table::{collision_report, unframed_homfly, KnotTable, Mode};
use qknot_core::xinv::{normalized_invariant, numeric_sweep, x_invariant};
use qknot_core::{BigRational, Error, Rational};

/// Digits after the decimal point in sweep output.
const DECIMALS: u32 = 15;

#[derive(Parser)]
#[command(name = "qknot", version, about = "q-deformed rationals and x-indexed HOMFLY-PT specializations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Right,
    Left,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-deformation of a rational number.
    Qrat {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "right")]
        flavor: FlavorArg,
        /// Also evaluate exactly at q = Q0.
        #[arg(long = "at", value_name = "Q0")]
        at: Option<String>,
    },
    /// Invariant of a braid closure.
    Inv {
        /// Space-separated letters, e.g. "1 -2 1".
        #[arg(allow_hyphen_values = true)]
        braid: String,
        /// homfly, x:R or flat:R
        #[arg(long, default_value = "homfly", allow_hyphen_values = true)]
        mode: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        mirror: bool,
    },
    /// Evaluate the x-invariant at q = q0 over an evenly spaced grid of x.
    Sweep {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(long, allow_hyphen_values = true)]
        q0: String,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        steps: u64,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        normalized: bool,
    },
    /// Group the knots of a table by invariant value and print a JSON report.
    Table {
        /// CSV of `name,"braid"` lines; the built-in table when omitted.
        file: Option<PathBuf>,
        #[arg(long, default_value = "homfly")]
        mode: String,
        #[arg(long)]
        with_mirrors: bool,
        /// Only print groups with two or more members.
        #[arg(long)]
        collisions: bool,
        /// Compare raw values instead of normalized ones.
        #[arg(long)]
        raw: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Pole(_) | Error::ZeroNorm | Error::DivisionByZero => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: 4, message: e.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Qrat { x, flavor, at } => cmd_qrat(&mut out, &x, flavor, at.as_deref()),
        Command::Inv { braid, mode, strands, normalized, mirror } => {
            cmd_inv(&mut out, &braid, &mode, strands, normalized, mirror)
        }
        Command::Sweep { braid, q0, from, to, steps, out: path, normalized } => {
            cmd_sweep(&mut out, &braid, &q0, &from, &to, steps, path, normalized)
        }
        Command::Table { file, mode, with_mirrors, collisions, raw } => {
            cmd_table(&mut out, file, &mode, with_mirrors, collisions, !raw)
        }
    };
    match result.and_then(|()| out.flush().map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_qrat(out: &mut impl Write, x: &str, flavor: FlavorArg, at: Option<&str>) -> CmdResult {
    let x = parse_rational(x)?;
    let f = match flavor {
        FlavorArg::Right => qrational(&x),
        FlavorArg::Left => left_qrational(&x),
    };
    writeln!(out, "{f}")?;
    if let Some(q0) = at {
        let q0 = parse_rational(q0)?;
        writeln!(out, "{}", f.eval(&q0)?)?;
    }
    Ok(())
}

fn cmd_inv(
    out: &mut impl Write,
    braid: &str,
    mode: &str,
    strands: Option<usize>,
    normalized: bool,
    mirror: bool,
) -> CmdResult {
    let mut w = parse_braid(braid, strands)?;
    if mirror {
        w = w.mirror();
    }
    let mode = Mode::parse(mode)?;
    let text = match (mode.context(), normalized) {
        (None, false) => homfly(&w).to_string(),
        (None, true) => unframed_homfly(&w).to_string(),
        (Some(ctx), false) => x_invariant(&w, &ctx)?.to_string(),
        (Some(ctx), true) => normalized_invariant(&w, &ctx)?.to_string(),
    };
    writeln!(out, "{text}")?;
    Ok(())
}

/// `r` rounded half away from zero to `digits` places.
fn decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let num = r.numer() * &scale;
    let den = r.denom();
    let neg = num.sign() == num_bigint::Sign::Minus;
    let mag: BigInt = if neg { -num } else { num };
    let rounded: BigInt = (mag * 2 + den) / (den * 2);
    let s = rounded.to_string();
    let s = format!("{s:0>width$}", width = digits as usize + 1);
    let (int, frac) = s.split_at(s.len() - digits as usize);
    let sign = if neg && rounded.sign() != num_bigint::Sign::NoSign { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    stdout: &mut impl Write,
    braid: &str,
    q0: &str,
    from: &str,
    to: &str,
    steps: u64,
    path: Option<PathBuf>,
    normalized: bool,
) -> CmdResult {
    let w = parse_braid(braid, None)?;
    let q0 = parse_rational(q0)?;
    let (from, to) = (parse_rational(from)?, parse_rational(to)?);
    if steps == 0 {
        return Err(Failure::usage("--steps must be at least 1"));
    }
    if from >= to {
        return Err(Failure::usage("--from must be less than --to"));
    }
    let step = (&to - &from) / Rational::from_integer(BigInt::from(steps));
    let xs: Vec<Rational> = (0..=steps).map(|i| &from + &step * Rational::from_integer(BigInt::from(i))).collect();

    let mut file;
    let sink: &mut dyn Write = match &path {
        Some(p) => {
            file = BufWriter::new(File::create(p).map_err(|e| Failure {
                code: 4,
                message: format!("cannot write {}: {e}", p.display()),
            })?);
            &mut file
        }
        None => stdout,
    };
    writeln!(sink, "x,value,flag")?;
    for row in numeric_sweep(&w, &q0, &xs, normalized) {
        match row.result {
            Ok((v, flag)) => writeln!(sink, "{},{},{}", row.x, decimal(&v, DECIMALS), flag.as_str())?,
            Err(e) => {
                eprintln!("x = {}: {e}", row.x);
                writeln!(sink, "{},,pole", row.x)?;
            }
        }
    }
    sink.flush()?;
    Ok(())
}

fn cmd_table(
    out: &mut impl Write,
    file: Option<PathBuf>,
    mode: &str,
    with_mirrors: bool,
    collisions: bool,
    normalized: bool,
) -> CmdResult {
    let mode = Mode::parse(mode)?;
    let mut table = match file {
        Some(p) => KnotTable::load(&p)?,
        None => KnotTable::mini(),
    };
    if with_mirrors {
        table = table.with_mirrors();
    }
    let mut report = collision_report(&table, &mode, normalized);
    if collisions {
        report.groups.retain(|g| g.len() > 1);
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| Failure { code: 4, message: e.to_string() })?;
    writeln!(out, "{json}")?;
    Ok(())
}
