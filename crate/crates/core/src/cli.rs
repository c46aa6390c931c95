//! The `unimass` command line: `mass`, `table`, `invariants`, `oracle`.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 domain precondition
//! (no even unimodular lattice, Gram matrix not positive definite), 4 search
//! bound exceeded, 1 internal numeric failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::exact::{Rational, SymbolicValue};
use crate::lambda::{case_for_signature, lambda_for_signature, DiscRow, LambdaCase};
use crate::localinv::{is_split_odd, signature_invariants, Place, Signature};
use crate::massformula::{column_labels, generate_table, mass_even_unimodular, mass_odd_unimodular, MassResult, Parity};
use crate::numeric::{eval, PrecisionContext};
use crate::oracle::{count_automorphisms, genus_mass_definite, GramMatrix};

pub const PRECISION_ENV: &str = "UNIMASS_PRECISION";
pub const DEFAULT_DIGITS: u32 = 30;

#[derive(Parser, Debug)]
#[command(name = "unimass", version, about = "Exact masses of unimodular lattices of signature (r,s)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mass of the genus of L_{r,s}
    Mass(MassArgs),
    /// Regenerate the mass tables
    Table(TableArgs),
    /// Local invariants of q_{r,s} and the 2-adic λ case
    Invariants(InvariantsArgs),
    /// Automorphism counts of definite Gram matrices
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct MassArgs {
    r: u32,
    s: u32,
    /// Append a decimal evaluation with N significant digits
    #[arg(long, value_name = "N", num_args = 0..=1)]
    decimal: Option<Option<u32>>,
    /// One-line JSON output
    #[arg(long)]
    json: bool,
    /// Mass of the even unimodular genus instead
    #[arg(long)]
    even: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, conflicts_with = "even", required_unless_present = "even")]
    odd: bool,
    #[arg(long)]
    even: bool,
    #[arg(long, default_value_t = 10)]
    nmax: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    r: u32,
    s: u32,
    /// A prime, or `inf` for the real place
    #[arg(long, conflicts_with = "all")]
    prime: Option<String>,
    /// Report at the real place and at 2
    #[arg(long)]
    all: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Also print the SO-normalized mass for a single file
    #[arg(long)]
    so: bool,
}

/// Structured exact mass.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ExactMass {
    pub coeff: String,
    pub pi_power: i64,
    pub zeta: Vec<u32>,
    pub beta: Vec<u32>,
}

/// One mass in machine-readable form.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub r: u32,
    pub s: u32,
    pub d: u32,
    pub n: u32,
    pub residue: u32,
    pub lambda2: String,
    pub mass_exact: ExactMass,
    pub mass_pretty: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_decimal: Option<String>,
}

/// `p/q`, always with an explicit denominator.
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl OutputRecord {
    pub fn new(m: &MassResult, decimal: Option<String>) -> Self {
        let sig = m.signature;
        OutputRecord {
            r: sig.r,
            s: sig.s,
            d: sig.dim(),
            n: sig.half_dim(),
            residue: sig.residue(),
            lambda2: rational_string(&m.lambda2),
            mass_exact: exact_mass(&m.mass),
            mass_pretty: m.mass.to_string(),
            mass_decimal: decimal,
        }
    }
}

pub fn exact_mass(v: &SymbolicValue) -> ExactMass {
    ExactMass {
        coeff: rational_string(v.coeff()),
        pi_power: v.pi_exponent(),
        zeta: v.zeta_args().to_vec(),
        beta: v.beta_args().to_vec(),
    }
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SignatureTooSmall { .. }
            | Error::NotPrime(_)
            | Error::Parse(_)
            | Error::TableRange(_)
            | Error::Precision { .. }
            | Error::ZeroEntry
            | Error::WrongParity { .. }
            | Error::LambdaRange(_)
            | Error::EvenUnit(_) => 2,
            Error::NoEvenUnimodular { .. } | Error::NotSymmetric | Error::NotPositiveDefinite => 3,
            Error::SearchBound(_) => 4,
            Error::MethodDisagreement { .. } => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the CLI with `UNIMASS_PRECISION` read from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(PRECISION_ENV).ok(), out, err)
}

pub fn run_with_env<I, T>(args: I, precision_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Mass(a) => cmd_mass(a, precision_env, out, err),
        Command::Table(a) => cmd_table(a, out),
        Command::Invariants(a) => cmd_invariants(a, out, err),
        Command::Oracle(a) => cmd_oracle(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "unimass: {}", f.msg);
            f.code
        }
    }
}

fn signature_arg(r: u32, s: u32, err: &mut dyn Write) -> std::result::Result<Signature, Failure> {
    let sig = Signature::new(r, s)?;
    if s > r {
        let _ = writeln!(err, "unimass: warning: reading ({r},{s}) as ({s},{r})");
    }
    Ok(sig.normalized())
}

fn default_digits(env: Option<String>) -> std::result::Result<u32, Failure> {
    match env {
        None => Ok(DEFAULT_DIGITS),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{PRECISION_ENV}={v} is not an integer"))),
    }
}

fn cmd_mass(a: MassArgs, env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let sig = signature_arg(a.r, a.s, err)?;
    let m = if a.even { mass_even_unimodular(sig)? } else { mass_odd_unimodular(sig) };
    let decimal = match a.decimal {
        None => None,
        Some(n) => {
            let digits = match n {
                Some(n) => n,
                None => default_digits(env)?,
            };
            let ctx = PrecisionContext::with_digits(digits)?;
            Some(eval(&m.mass, &ctx)?)
        }
    };
    let rec = OutputRecord::new(&m, decimal);
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
        return Ok(());
    }
    writeln!(out, "signature: ({},{})", rec.r, rec.s)?;
    writeln!(out, "genus: {}", if a.even { "even unimodular" } else { "odd unimodular" })?;
    writeln!(out, "d: {}  n: {}  r-s mod 8: {}", rec.d, rec.n, rec.residue)?;
    writeln!(out, "lambda2: {}", rec.lambda2)?;
    writeln!(out, "mass: {}", rec.mass_pretty)?;
    writeln!(out, "coeff: {}  pi^{}  zeta{:?}  beta{:?}", rec.mass_exact.coeff, rec.mass_exact.pi_power, rec.mass_exact.zeta, rec.mass_exact.beta)?;
    if let Some(d) = &rec.mass_decimal {
        writeln!(out, "decimal: {d}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonCell {
    column: &'static str,
    record: OutputRecord,
}

#[derive(Serialize)]
struct JsonRow {
    n: u32,
    cells: Vec<JsonCell>,
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> CmdResult {
    let parity = if a.even { Parity::Even } else { Parity::Odd };
    let rows = generate_table(parity, a.nmax)?;
    let labels = column_labels(parity);
    match a.format {
        Format::Csv => {
            writeln!(out, "n,{}", labels.join(","))?;
            for row in &rows {
                let cells: Vec<String> = row.cells.iter().map(|c| c.mass.to_string()).collect();
                writeln!(out, "{},{}", row.n, cells.join(","))?;
            }
        }
        Format::Json => {
            let json: Vec<JsonRow> = rows
                .iter()
                .map(|row| JsonRow {
                    n: row.n,
                    cells: row
                        .cells
                        .iter()
                        .zip(labels.iter())
                        .map(|(c, &column)| JsonCell { column, record: OutputRecord::new(c, None) })
                        .collect(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&json).expect("table serializes"))?;
        }
        Format::Text => {
            let header: Vec<String> = labels.iter().map(|l| format!("r-s = {l} (8)")).collect();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    std::iter::once(row.n.to_string())
                        .chain(row.cells.iter().map(|c| c.mass.to_string()))
                        .collect()
                })
                .collect();
            let head: Vec<String> = std::iter::once("n".to_string()).chain(header).collect();
            let widths: Vec<usize> = (0..head.len())
                .map(|i| body.iter().map(|r| r[i].len()).chain([head[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| -> String {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join(" | ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(&head))?;
            for r in &body {
                writeln!(out, "{}", line(r))?;
            }
        }
    }
    Ok(())
}

fn parse_place(text: &str) -> std::result::Result<Place, Failure> {
    match text {
        "inf" | "infinity" | "oo" => Ok(Place::Real),
        _ => {
            let p: u64 = text.parse().map_err(|_| usage(format!("invalid place `{text}`")))?;
            Ok(Place::prime(p)?)
        }
    }
}

fn case_label(sig: Signature) -> String {
    if sig.is_odd_dim() {
        return if is_split_odd(sig).expect("odd d") { "split".into() } else { "non-split".into() };
    }
    match case_for_signature(sig) {
        LambdaCase::CaseA => "A (ramified)".into(),
        LambdaCase::CaseB => "B".into(),
        LambdaCase::CaseC => "C (contains even unimodular lattices)".into(),
        LambdaCase::OddDim => unreachable!("even d"),
    }
}

fn cmd_invariants(a: InvariantsArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let sig = signature_arg(a.r, a.s, err)?;
    let places = match &a.prime {
        Some(p) => vec![parse_place(p)?],
        None => vec![Place::Real, Place::Prime(2)],
    };
    writeln!(out, "signature: ({},{})  d: {}  n: {}", sig.r, sig.s, sig.dim(), sig.half_dim())?;
    for v in places {
        let inv = signature_invariants(sig, v);
        let disc = inv.disc_class.numer().to_string();
        write!(out, "place {v}: dim {}, disc {}, hasse_witt {}", inv.dim, disc, inv.hasse_witt.to_i64())?;
        match v {
            Place::Real => writeln!(out)?,
            Place::Prime(2) => {
                if !sig.is_odd_dim() {
                    let row = DiscRow::of_unit(inv.disc_class.numer().try_into().expect("disc is ±1"))?;
                    write!(out, ", disc row {row:?}")?;
                }
                writeln!(out, ", case {}, lambda {}", case_label(sig), lambda_for_signature(sig))?;
            }
            Place::Prime(_) => writeln!(out, ", case maximal at odd p, lambda 1")?,
        }
    }
    writeln!(out, "lambda2: {}", lambda_for_signature(sig))?;
    Ok(())
}

fn cmd_oracle(a: OracleArgs, out: &mut dyn Write) -> CmdResult {
    let mut grams = Vec::with_capacity(a.files.len());
    for path in &a.files {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let g = GramMatrix::parse(&text).map_err(|e| match e {
            Error::Parse(_) => usage(format!("{}: {e}", path.display())),
            other => Failure::from(other),
        })?;
        grams.push(g);
    }
    let multiple = grams.len() > 1;
    for (path, g) in a.files.iter().zip(&grams) {
        let c = count_automorphisms(g)?;
        if multiple {
            write!(out, "{}: ", path.display())?;
        }
        writeln!(out, "total={} so={}", c.total, c.so_part)?;
    }
    if multiple || a.so {
        let mass = genus_mass_definite(&grams)?;
        writeln!(out, "mass={}", mass)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_env(std::iter::once("unimass").chain(args.iter().copied()), None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["mass", "1", "1"]).0, 2);
        assert_eq!(run_capture(&["mass", "9", "2", "--even"]).0, 3);
        assert_eq!(run_capture(&["mass", "x", "1"]).0, 2);
        assert_eq!(run_capture(&["invariants", "3", "0", "--prime", "9"]).0, 2);
        assert_eq!(run_capture(&["table", "--odd", "--nmax", "31"]).0, 2);
        assert_eq!(run_capture(&["mass", "3", "0", "--decimal", "5"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn swap_warns() {
        let (code, out, err) = run_capture(&["mass", "1", "2"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning"));
        assert!(out.contains("mass: 1/8"));
    }

    #[test]
    fn env_precision() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_env(["unimass", "mass", "3", "0", "--decimal", "--json"], Some("12".into()), &mut out, &mut err);
        assert_eq!(code, 0);
        assert!(String::from_utf8(out).unwrap().contains("\"mass_decimal\":\"0.0416666666667\""));
        let code = run_with_env(["unimass", "mass", "3", "0", "--decimal"], Some("abc".into()), &mut Vec::new(), &mut Vec::new());
        assert_eq!(code, 2);
    }
}
