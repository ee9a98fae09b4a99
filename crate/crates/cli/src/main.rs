mod cache;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use brauer_core::combinat::cell_labels;
use brauer_core::diagram::oracle::{gram_matrix_oracle, is_sanctioned, ORACLE_MAX_N};
use brauer_core::gram::{semisimple_check, Characteristic};
use brauer_core::ring::factored::is_prime_u64;
use brauer_core::ring::rational::{determinant, format_rational, parse_rational};
use brauer_core::seminormal::CheckRecord;
use brauer_core::{gram_det, verify_seminormal, CellLabel, DeltaSpec, Error, VerificationReport};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::cache::Record;

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Unsanctioned(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Unsanctioned(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsanctioned { .. } => CliError::Unsanctioned(e.to_string()),
            Error::InvalidPartition(_)
            | Error::InvalidLabel(_)
            | Error::InvalidTableau(_)
            | Error::Parse(_)
            | Error::IndexOutOfRange { .. }
            | Error::SizeMismatch(..)
            | Error::LevelMismatch(..) => CliError::Invalid(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "brauer", version, about = "Gram determinants of Brauer algebra cell modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Factored determinant of one cell module.
    Det {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f: usize,
        /// Partition such as "3,2,1"; "-" is empty.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// JSON lines for every label up to n-max, cached under BRAUER_CACHE_DIR.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gram matrix in the Murphy basis at a rational delta, from diagrams.
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Exact rational "p/q".
        #[arg(long, allow_hyphen_values = true)]
        at_delta: String,
    },
    /// Check closed forms and determinants against the diagram algebra.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        deltas: Vec<String>,
        /// Write the full JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Whether B_n(delta) is semisimple over a field of the given characteristic.
    Semisimple {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
}

fn label(n: usize, f: usize, lambda: &str) -> Result<CellLabel, CliError> {
    Ok(CellLabel::parse(n, f, lambda)?)
}

fn oracle_level(n: usize) -> Result<(), CliError> {
    if n == 0 || n > ORACLE_MAX_N {
        return Err(CliError::Invalid(format!(
            "diagram computations need 1 <= n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    Ok(())
}

fn sanctioned(n: usize, delta: &BigRational) -> Result<(), CliError> {
    if !is_sanctioned(n, delta) {
        return Err(CliError::Unsanctioned(format!(
            "delta = {} is not sanctioned for n = {n}: use a non-integer or an integer with |delta| >= {}",
            format_rational(delta),
            2 * n - 1
        )));
    }
    Ok(())
}

fn stdout_write(s: &str) -> Result<(), CliError> {
    io::stdout()
        .write_all(s.as_bytes())
        .map_err(|e| CliError::Failure(format!("output: {e}")))
}

fn cmd_det(n: usize, f: usize, lambda: &str, format: Format) -> Result<(), CliError> {
    let c = label(n, f, lambda)?;
    if n == 0 {
        return Err(CliError::Invalid("n must be at least 1".into()));
    }
    let r = gram_det(&c)?;
    match format {
        Format::Text => stdout_write(&format!("{}\n", r.det)),
        Format::Json => stdout_write(&Record::from_result(&r).to_line()),
    }
}

fn cmd_table(n_max: usize, out: Option<PathBuf>) -> Result<(), CliError> {
    let cache = cache::cache_path();
    let mut sink: Box<dyn Write> = match &out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Failure(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    cache::write_table(n_max, cache.as_deref(), &mut sink)?;
    sink.flush().map_err(|e| CliError::Failure(format!("output: {e}")))
}

fn cmd_gram(n: usize, f: usize, lambda: &str, at_delta: &str) -> Result<(), CliError> {
    let c = label(n, f, lambda)?;
    oracle_level(n)?;
    let delta = parse_rational(at_delta)?;
    sanctioned(n, &delta)?;
    let g = gram_matrix_oracle(&c, &delta)?;
    let rows: Vec<Vec<String>> = g
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    stdout_write(&format!("{}\n", serde_json::to_string(&rows).expect("serializable")))
}

fn cmd_verify(n_max: usize, deltas: &[String], report: Option<PathBuf>) -> Result<(), CliError> {
    oracle_level(n_max)?;
    if deltas.is_empty() {
        return Err(CliError::Invalid("--deltas needs at least one value".into()));
    }
    let deltas = deltas
        .iter()
        .map(|d| parse_rational(d))
        .collect::<Result<Vec<_>, _>>()?;
    for d in &deltas {
        sanctioned(n_max, d)?;
    }
    let mut full = VerificationReport::default();
    for n in 1..=n_max {
        for c in cell_labels(n) {
            let det = gram_det(&c)?.det;
            for d in &deltas {
                let rep = verify_seminormal(&c, d)?;
                let recursion = det.evaluate(d)?;
                let oracle = determinant(&gram_matrix_oracle(&c, d)?);
                let checks = rep.records.len() + 1;
                let mut rep = rep;
                rep.records.push(CheckRecord {
                    check: "oracle_det".into(),
                    cell: c.to_string(),
                    tableaux: Vec::new(),
                    k: None,
                    closed_form: format_rational(&recursion),
                    oracle: format_rational(&oracle),
                    pass: recursion == oracle,
                });
                let failed = rep.failures().count();
                println!(
                    "{c} delta={}: {checks} checks, {}",
                    format_rational(d),
                    if failed == 0 { "pass".to_string() } else { format!("{failed} FAILED") }
                );
                full.extend(rep);
            }
        }
    }
    if let Some(path) = report {
        let text = serde_json::to_string_pretty(&full.to_json()).expect("serializable");
        std::fs::write(&path, text + "\n")
            .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    }
    let failed = full.failures().count();
    println!("{} checks, {failed} failed", full.records.len());
    if failed > 0 {
        for r in full.failures().take(20) {
            eprintln!(
                "FAILED {} {} {:?} k={:?}: closed {} oracle {}",
                r.check, r.cell, r.tableaux, r.k, r.closed_form, r.oracle
            );
        }
        return Err(CliError::Failure(format!("{failed} checks failed")));
    }
    Ok(())
}

fn cmd_semisimple(n: usize, delta: &str, characteristic: u64) -> Result<(), CliError> {
    let delta = parse_rational(delta)?;
    let char_e: Characteristic = match characteristic {
        0 => None,
        e if is_prime_u64(e) => Some(e),
        e => return Err(CliError::Invalid(format!("characteristic {e} is neither 0 nor prime"))),
    };
    let spec = match char_e {
        _ if delta.is_integer() => DeltaSpec::Integer(delta.numer().clone()),
        None => DeltaSpec::NonInteger,
        Some(e) => {
            let e_big = BigInt::from(e);
            let q = delta.denom().mod_floor(&e_big);
            if q == BigInt::from(0) {
                return Err(CliError::Invalid(format!(
                    "delta = {} has no value in characteristic {e}",
                    format_rational(&delta)
                )));
            }
            let q_inv = q.modpow(&BigInt::from(e - 2), &e_big);
            let residue = (delta.numer() * q_inv).mod_floor(&e_big);
            DeltaSpec::Integer(BigInt::from(residue.to_u64().expect("reduced")))
        }
    };
    stdout_write(&format!("{}\n", semisimple_check(n, &spec, char_e)))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Det {
            n,
            f,
            lambda,
            format,
        } => cmd_det(n, f, &lambda, format),
        Command::Table { n_max, out } => cmd_table(n_max, out),
        Command::Gram {
            n,
            f,
            lambda,
            at_delta,
        } => cmd_gram(n, f, &lambda, &at_delta),
        Command::Verify {
            n_max,
            deltas,
            report,
        } => cmd_verify(n_max, &deltas, report),
        Command::Semisimple {
            n,
            delta,
            characteristic,
        } => cmd_semisimple(n, &delta, characteristic),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Invalid(m) | CliError::Unsanctioned(m) | CliError::Failure(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.code())
        }
    }
}
