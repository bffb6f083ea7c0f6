//! The `qnarayana` command line.
//!
//! Exit codes: 0 when every executed check passes, 1 on a mismatch or an
//! internal error, 2 on a usage error.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::dyckoracle::{qt_distribution, symmetric_valley_distribution, MAX_QT_N, MAX_SYMMETRIC_N};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, catalan, Integer, Polynomial};
use crate::gfun::SeriesTag;
use crate::hankel::{expected_jfraction, family_series, hankel_table, jfraction_extract, HankelRow};
use crate::narayana::{c_poly, narayana_b_poly, narayana_poly, v_coeff, Family};
use crate::qcomb::{q_catalan, QNarayanaRow};
use crate::verify::{registry, run_checks, Check, Fixtures, VerifyConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qnarayana", version, about = "Exact q-Narayana polynomials and their q = -1 identities")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print one polynomial of a family
    Poly(PolyArgs),
    /// Hankel determinant tables beside their predicted values
    Hankel(HankelArgs),
    /// J-fraction coefficients beside their closed forms
    Cfrac(CfracArgs),
    /// Run registered checks
    Verify(VerifyArgs),
    /// Compare Dyck path enumerations with the closed formulas
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: PolyFamily,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct HankelArgs {
    /// Defaults to both families
    #[arg(long, value_enum)]
    family: Option<HankelFamily>,
    /// Defaults to both shifts
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    shift: Option<u8>,
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=30))]
    max_n: u64,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CfracArgs {
    /// Defaults to both series
    #[arg(long, value_enum)]
    family: Option<CfracFamily>,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=30))]
    depth: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every registered check (the default)
    #[arg(long, conflicts_with = "identity")]
    all: bool,
    /// Run only the named check; repeatable
    #[arg(long, value_name = "CHECK")]
    identity: Vec<String>,
    /// Truncation order of the generating-function identities
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(2..=200))]
    order: u64,
    /// JSON file with the stored first terms to check
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=MAX_QT_N as u64))]
    q_max_n: u64,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=MAX_SYMMETRIC_N as u64))]
    sym_max_n: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum PolyFamily {
    /// c_n(t)
    #[value(name = "c", alias = "small_c")]
    SmallC,
    /// C_n(t)
    Narayana,
    /// W_n(t)
    NarayanaB,
    /// Catalan number
    Catalan,
    /// [2n choose n]_q / [n+1]_q
    QCatalan,
    /// C_n(t; q), one q-polynomial per power of t
    QNarayana,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HankelFamily {
    C,
    Narayana,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CfracFamily {
    C,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn format_of(json: bool, csv: bool) -> Format {
    match (json, csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    }
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Poly { family: PolyFamily, n: usize, format: Format },
    Hankel { families: Vec<Family>, shifts: Vec<usize>, max_n: usize, format: Format },
    Cfrac { tags: Vec<SeriesTag>, depth: usize, format: Format },
    Verify { checks: Vec<Check>, config: VerifyConfig, fixtures: Option<PathBuf>, format: Format },
    Oracle { q_max_n: usize, sym_max_n: usize, format: Format },
}

/// Rejected command line, or a request for help or version text.
#[derive(Debug)]
pub struct ParseFailure(clap::Error);

impl ParseFailure {
    /// 0 for help and version output, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.0.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
            _ => EXIT_USAGE,
        }
    }

    pub fn is_usage_error(&self) -> bool {
        self.exit_code() == EXIT_USAGE
    }

    pub fn render(&self) -> String {
        self.0.render().to_string()
    }
}

impl fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render().trim_end())
    }
}

impl std::error::Error for ParseFailure {}

/// Parses and validates `argv`, where `argv[0]` is the program name.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<Command, ParseFailure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(ParseFailure)?;
    let invalid = |msg: String| ParseFailure(Cli::command().error(ErrorKind::InvalidValue, msg));
    Ok(match cli.verb {
        Verb::Poly(a) => Command::Poly { family: a.family, n: a.n, format: format_of(a.json, false) },
        Verb::Hankel(a) => Command::Hankel {
            families: match a.family {
                Some(HankelFamily::C) => vec![Family::SmallC],
                Some(HankelFamily::Narayana) => vec![Family::NarayanaPoly],
                None => vec![Family::NarayanaPoly, Family::SmallC],
            },
            shifts: a.shift.map_or(vec![0, 1], |s| vec![s as usize]),
            max_n: a.max_n as usize,
            format: format_of(a.json, a.csv),
        },
        Verb::Cfrac(a) => Command::Cfrac {
            tags: match a.family {
                Some(CfracFamily::C) => vec![SeriesTag::SmallC],
                Some(CfracFamily::G) => vec![SeriesTag::SmallG],
                None => vec![SeriesTag::SmallC, SeriesTag::SmallG],
            },
            depth: a.depth as usize,
            format: format_of(a.json, false),
        },
        Verb::Verify(a) => {
            let checks = if a.identity.is_empty() {
                registry()
            } else {
                a.identity
                    .iter()
                    .map(|name| {
                        Check::by_name(name)
                            .map_err(|_| invalid(format!("unknown check '{name}' for '--identity <CHECK>'")))
                    })
                    .collect::<std::result::Result<_, _>>()?
            };
            let config = VerifyConfig { order: a.order as usize, ..VerifyConfig::default() };
            Command::Verify { checks, config, fixtures: a.fixtures, format: format_of(a.json, false) }
        }
        Verb::Oracle(a) => Command::Oracle {
            q_max_n: a.q_max_n as usize,
            sym_max_n: a.sym_max_n as usize,
            format: format_of(a.json, false),
        },
    })
}

/// Runs a validated command, writing the report to `out`. Returns the exit
/// code; errors from the library propagate.
pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Poly { family, n, format } => poly(*family, *n, *format, out),
        Command::Hankel { families, shifts, max_n, format } => hankel(families, shifts, *max_n, *format, out),
        Command::Cfrac { tags, depth, format } => cfrac(tags, *depth, *format, out),
        Command::Verify { checks, config, fixtures, format } => {
            let fixtures = match fixtures {
                Some(path) => Fixtures::load(path)?,
                None => Fixtures::default(),
            };
            verify(checks, &fixtures, config, *format, out)
        }
        Command::Oracle { q_max_n, sym_max_n, format } => oracle(*q_max_n, *sym_max_n, *format, out),
    }
}

/// Parses, executes and reports; returns the process exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cmd = match parse_args(argv) {
        Ok(cmd) => cmd,
        Err(failure) => {
            let code = failure.exit_code();
            let _ = if code == EXIT_PASS {
                write!(out, "{}", failure.render())
            } else {
                write!(err, "{}", failure.render())
            };
            return code;
        }
    };
    match execute(&cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qnarayana: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_FAIL
            }
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let code = run_with(argv, &mut out, &mut stderr.lock());
    if out.flush().is_err() {
        return EXIT_FAIL;
    }
    code
}

fn io_err(e: io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn poly(family: PolyFamily, n: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    if family == PolyFamily::QNarayana {
        let row = QNarayanaRow::compute(n)?;
        if format == Format::Json {
            emit_json(out, &json!({ "family": family, "n": n, "entries": row.entries }))?;
        } else {
            for (k, p) in row.entries.iter().enumerate() {
                writeln!(out, "t^{k}: {p}").map_err(io_err)?;
            }
        }
        return Ok(EXIT_PASS);
    }
    let p: Polynomial = match family {
        PolyFamily::SmallC => c_poly(n),
        PolyFamily::Narayana => narayana_poly(n),
        PolyFamily::NarayanaB => narayana_b_poly(n),
        PolyFamily::Catalan => Family::CatalanC.member(n),
        PolyFamily::QCatalan => q_catalan(n)?,
        PolyFamily::QNarayana => unreachable!(),
    };
    if format == Format::Json {
        emit_json(out, &json!({ "family": family, "n": n, "poly": p }))?;
    } else {
        writeln!(out, "{p}").map_err(io_err)?;
    }
    Ok(EXIT_PASS)
}

fn hankel(
    families: &[Family],
    shifts: &[usize],
    max_n: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut rows: Vec<HankelRow> = Vec::new();
    for &family in families {
        for &shift in shifts {
            rows.extend(hankel_table(family, shift, max_n)?);
        }
    }
    match format {
        Format::Json => emit_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "{}", HankelRow::CSV_HEADER).map_err(io_err)?;
            for r in &rows {
                writeln!(out, "{}", r.to_csv()).map_err(io_err)?;
            }
        }
        Format::Text => {
            for r in &rows {
                writeln!(out, "{r}").map_err(io_err)?;
            }
        }
    }
    Ok(if rows.iter().all(|r| r.matches) { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct CfracLevel {
    k: usize,
    s: String,
    t: Option<String>,
    expected_s: String,
    expected_t: String,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct CfracReport {
    family: &'static str,
    depth: usize,
    terminated: bool,
    levels: Vec<CfracLevel>,
}

fn cfrac(tags: &[SeriesTag], depth: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    let mut reports = Vec::new();
    for &tag in tags {
        let jf = jfraction_extract(&family_series(tag, depth), depth)?;
        let mut levels = Vec::new();
        // the trailing s_depth has no t beside it
        for k in 0..jf.s.len() {
            let (es, et) = expected_jfraction(tag, k)?;
            let t = jf.t.get(k);
            let matches = jf.s[k] == es && t.is_none_or(|t| *t == et);
            levels.push(CfracLevel {
                k,
                s: jf.s[k].to_string(),
                t: t.map(ToString::to_string),
                expected_s: es.to_string(),
                expected_t: et.to_string(),
                matches,
            });
        }
        let family = if tag == SeriesTag::SmallC { "c" } else { "g" };
        reports.push(CfracReport { family, depth, terminated: jf.terminated, levels });
    }
    let ok = reports.iter().all(|r| !r.terminated && r.levels.iter().all(|l| l.matches));
    if format == Format::Json {
        emit_json(out, &reports)?;
    } else {
        for r in &reports {
            writeln!(
                out,
                "{} depth {}{}",
                r.family,
                r.depth,
                if r.terminated { " (terminated)" } else { "" }
            )
            .map_err(io_err)?;
            for l in &r.levels {
                writeln!(
                    out,
                    "  k={}: s={} t={} | expected s={} t={} [{}]",
                    l.k,
                    l.s,
                    l.t.as_deref().unwrap_or("-"),
                    l.expected_s,
                    l.expected_t,
                    if l.matches { "match" } else { "MISMATCH" }
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

fn verify(
    checks: &[Check],
    fixtures: &Fixtures,
    config: &VerifyConfig,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let outcomes = run_checks(checks, fixtures, config);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let failed = outcomes.len() - passed;
    if format == Format::Json {
        emit_json(
            out,
            &json!({ "checks": outcomes, "total": outcomes.len(), "passed": passed, "failed": failed }),
        )?;
    } else {
        for o in &outcomes {
            writeln!(out, "{o}").map_err(io_err)?;
        }
        writeln!(out, "{} checks: {passed} passed, {failed} failed", outcomes.len()).map_err(io_err)?;
    }
    Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct OracleRow {
    side: &'static str,
    n: usize,
    k: usize,
    enumerated: String,
    formula: String,
    #[serde(rename = "match")]
    matches: bool,
}

fn oracle(q_max_n: usize, sym_max_n: usize, format: Format, out: &mut dyn Write) -> Result<i32> {
    let mut rows = Vec::new();
    let mut counts_ok = true;
    for n in 1..=q_max_n {
        let dist = qt_distribution(n)?;
        let row = QNarayanaRow::compute(n)?;
        let total: Integer = dist.values().map(|p| p.eval(&Integer::from(1))).sum();
        counts_ok &= total == catalan(n as u64);
        for k in 0..n.max(dist.keys().max().map_or(0, |k| k + 1)) {
            let enumerated = dist.get(&k).cloned().unwrap_or_else(|| Polynomial::zero(crate::Var::Q));
            let formula = row.entries.get(k).cloned().unwrap_or_else(|| Polynomial::zero(crate::Var::Q));
            rows.push(OracleRow {
                side: "q",
                n,
                k,
                matches: enumerated == formula,
                enumerated: enumerated.to_string(),
                formula: formula.to_string(),
            });
        }
    }
    for n in 1..=sym_max_n {
        let dist = symmetric_valley_distribution(n)?;
        let total: Integer = dist.values().sum();
        counts_ok &= total == binomial(n as i64, n as i64 / 2);
        for k in 0..=n.max(dist.keys().max().copied().unwrap_or(0)) {
            let enumerated = dist.get(&k).cloned().unwrap_or_default();
            let formula = v_coeff(n, k as i64);
            rows.push(OracleRow {
                side: "symmetric",
                n,
                k,
                matches: enumerated == formula,
                enumerated: enumerated.to_string(),
                formula: formula.to_string(),
            });
        }
    }
    let ok = counts_ok && rows.iter().all(|r| r.matches);
    if format == Format::Json {
        emit_json(out, &json!({ "rows": rows, "counts_match": counts_ok }))?;
    } else {
        for r in &rows {
            writeln!(
                out,
                "{} n={} k={}: enumerated {} | formula {} [{}]",
                r.side,
                r.n,
                r.k,
                r.enumerated,
                r.formula,
                if r.matches { "match" } else { "MISMATCH" }
            )
            .map_err(io_err)?;
        }
        writeln!(out, "path counts {}", if counts_ok { "match" } else { "MISMATCH" }).map_err(io_err)?;
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}
