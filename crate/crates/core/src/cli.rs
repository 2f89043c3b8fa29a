//! The `detsurf` command-line front end.
//!
//! Data goes to stdout (or `--out FILE`), diagnostics to stderr. Exit codes:
//! 0 success, 1 verification failure or internal error, 2 usage error.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cohomology::{
    component_report, component_table, dim_det, verify_conjecture, Classification, ComponentReport,
};
use crate::error::{Error, Result};
use crate::ff_oracle::{default_fermat_modulus, fermat_check, jacobian_rank, DEFAULT_MODULUS, MAX_DET_SIZE};
use crate::nl_lattice::quartic_divisor_degrees;
use crate::pairs::{enumerate_classes, enumerate_classes_with, fmt_seq, AdmissiblePair, EnumerationOptions};

/// Environment variable overriding the default prime for `oracle` and `fermat`.
pub const MODULUS_ENV: &str = "DETSURF_MODULUS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List the families det(a,b) of degree D.
    Pairs {
        d: i64,
        /// Also list pairs with constant entries (b_1 = a_t).
        #[arg(long)]
        raw_pairs: bool,
        /// Do not identify a pair with its transpose.
        #[arg(long)]
        no_transpose_dedup: bool,
    },
    /// Dimension, codimension and curve invariants of every family of degree D.
    Report {
        d: i64,
        /// Restrict to matrices of size T.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Codimension multiset and component count for degree D.
    Table { d: i64 },
    /// The five determinantal quartic divisors and their degrees.
    Quartics,
    /// Check the extremal-pair bounds for every class up to --d-max.
    Conjecture {
        #[arg(long)]
        d_max: i64,
    },
    /// Compare dim det(a,b) with a finite-field Jacobian rank for degree D.
    Oracle { d: i64 },
    /// Check that the Fermat matrix of every pair of degree D has det x^d+y^d+z^d+w^d.
    Fermat { d: i64 },
}

#[derive(Debug, Parser)]
#[command(
    name = "detsurf",
    version,
    about = "Determinantal surfaces in P^3: dimensions, Noether-Lefschetz components, quartic divisor degrees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the random matrices of `oracle`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Prime modulus for `oracle` and `fermat`.
    #[arg(long, global = true, env = MODULUS_ENV)]
    pub modulus: Option<u64>,
    /// Write data to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub seed: u64,
    pub modulus: Option<u64>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self { command, format: Format::Text, seed: 0, modulus: None }
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }
}

impl From<&Cli> for RunConfig {
    fn from(cli: &Cli) -> Self {
        Self { command: cli.command.clone(), format: cli.format, seed: cli.seed, modulus: cli.modulus }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::InvalidPair(_) => 2,
        _ => 1,
    }
}

/// Parses `args`, runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let config = RunConfig::from(&cli);
    let result = match &cli.out {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => {
                let mut w = io::BufWriter::new(f);
                run(&config, &mut w).and_then(|o| w.flush().map(|_| o).map_err(io_error))
            }
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return 2;
            }
        },
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            run(&config, &mut w)
        }
    };
    match result {
        Ok(outcome) => {
            if outcome == Outcome::VerificationFailed {
                eprintln!("verification failed");
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn io_error(e: io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

/// Executes one command, writing its data to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<Outcome> {
    let (text, outcome) = render(config)?;
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(outcome)
}

/// Renders the output of one command as a string; used by [`run`].
pub fn render(config: &RunConfig) -> Result<(String, Outcome)> {
    let fmt = config.format;
    match &config.command {
        Command::Pairs { d, raw_pairs, no_transpose_dedup } => {
            let opts = EnumerationOptions { include_unreduced: *raw_pairs, transpose_dedup: !no_transpose_dedup };
            Ok((render_pairs(*d, opts, fmt)?, Outcome::Success))
        }
        Command::Report { d, t } => Ok((render_report(*d, *t, fmt)?, Outcome::Success)),
        Command::Table { d } => Ok((render_table(*d, fmt)?, Outcome::Success)),
        Command::Quartics => Ok((render_quartics(fmt)?, Outcome::Success)),
        Command::Conjecture { d_max } => render_conjecture(*d_max, fmt),
        Command::Oracle { d } => render_oracle(*d, config.modulus.unwrap_or(DEFAULT_MODULUS), config.seed, fmt),
        Command::Fermat { d } => render_fermat(*d, config.modulus, fmt),
    }
}

fn seq(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

#[derive(Serialize)]
struct PairRecord<'a> {
    d: i64,
    t: usize,
    a: &'a [i64],
    b: &'a [i64],
    reduced: bool,
    members: &'a [AdmissiblePair],
}

fn render_pairs(d: i64, opts: EnumerationOptions, fmt: Format) -> Result<String> {
    let classes = enumerate_classes_with(d, opts)?;
    let dual_of = |c: &crate::pairs::PairClass| c.members.get(1).cloned();
    Ok(match fmt {
        Format::Json => {
            let recs: Vec<PairRecord> = classes
                .iter()
                .map(|c| PairRecord {
                    d,
                    t: c.len(),
                    a: c.representative.a(),
                    b: c.representative.b(),
                    reduced: c.representative.is_reduced(),
                    members: &c.members,
                })
                .collect();
            to_json(&recs)
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = classes
                .iter()
                .map(|c| {
                    let dual = dual_of(c);
                    vec![
                        d.to_string(),
                        c.len().to_string(),
                        seq(c.representative.a()),
                        seq(c.representative.b()),
                        c.representative.is_reduced().to_string(),
                        dual.as_ref().map_or(String::new(), |p| seq(p.a())),
                        dual.as_ref().map_or(String::new(), |p| seq(p.b())),
                    ]
                })
                .collect();
            to_csv(&["d", "t", "a", "b", "reduced", "dual_a", "dual_b"], &rows)
        }
        Format::Text => {
            let mut s = String::new();
            for c in &classes {
                let _ = write!(s, "t={}  {}", c.len(), c.representative);
                if let Some(dual) = dual_of(c) {
                    let _ = write!(s, "  ~  {dual}");
                }
                if !c.representative.is_reduced() {
                    s.push_str("  (unreduced)");
                }
                s.push('\n');
            }
            let _ = writeln!(s, "{} classes of degree {d}", classes.len());
            s
        }
    })
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    a: &'a [i64],
    b: &'a [i64],
    d: i64,
    t: usize,
    #[serde(rename = "d_C")]
    d_c: i128,
    #[serde(rename = "g_C")]
    g_c: i128,
    #[serde(rename = "h1_OC_d")]
    h1_oc_d: i128,
    kappa: i128,
    h1_normal: i128,
    hilbert_dim: i128,
    dim: i128,
    codim: i128,
    #[serde(rename = "h0_OXC")]
    h0_oxc: i128,
    classification: Classification,
}

impl<'a> From<&'a ComponentReport> for ReportRecord<'a> {
    fn from(r: &'a ComponentReport) -> Self {
        Self {
            a: r.pair.a(),
            b: r.pair.b(),
            d: r.d,
            t: r.t,
            d_c: r.curve.degree,
            g_c: r.curve.genus,
            h1_oc_d: r.curve.h1_od,
            kappa: r.curve.kappa,
            h1_normal: r.curve.h1_normal,
            hilbert_dim: r.hilbert_dim,
            dim: r.dim_det,
            codim: r.codim,
            h0_oxc: r.h0_oxc,
            classification: r.classification,
        }
    }
}

const REPORT_COLUMNS: [&str; 14] = [
    "a",
    "b",
    "d",
    "t",
    "d_C",
    "g_C",
    "h1_OC_d",
    "kappa",
    "h1_normal",
    "hilbert_dim",
    "dim",
    "codim",
    "h0_OXC",
    "classification",
];

fn render_report(d: i64, t: Option<usize>, fmt: Format) -> Result<String> {
    let classes = enumerate_classes(d)?;
    if let Some(t) = t {
        if t < 2 || t as i64 > d {
            return Err(Error::InvalidArgument(format!("--t must be in 2..={d}, got {t}")));
        }
    }
    let reports = classes
        .iter()
        .filter(|c| t.is_none_or(|t| c.len() == t))
        .map(|c| component_report(&c.representative))
        .collect::<Result<Vec<_>>>()?;
    let recs: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    Ok(match fmt {
        Format::Json => to_json(&recs),
        Format::Csv => {
            let rows: Vec<Vec<String>> = recs
                .iter()
                .map(|r| {
                    vec![
                        seq(r.a),
                        seq(r.b),
                        r.d.to_string(),
                        r.t.to_string(),
                        r.d_c.to_string(),
                        r.g_c.to_string(),
                        r.h1_oc_d.to_string(),
                        r.kappa.to_string(),
                        r.h1_normal.to_string(),
                        r.hilbert_dim.to_string(),
                        r.dim.to_string(),
                        r.codim.to_string(),
                        r.h0_oxc.to_string(),
                        r.classification.as_str().to_string(),
                    ]
                })
                .collect();
            to_csv(&REPORT_COLUMNS, &rows)
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<28} {:>3} {:>6} {:>6} {:>6} {:>6} {:>6}  class",
                "pair", "t", "d_C", "g_C", "dim", "codim", "kappa"
            );
            for r in &recs {
                let pair = format!("a={} b={}", fmt_seq(r.a), fmt_seq(r.b));
                let _ = writeln!(
                    s,
                    "{pair:<28} {:>3} {:>6} {:>6} {:>6} {:>6} {:>6}  {}",
                    r.t,
                    r.d_c,
                    r.g_c,
                    r.dim,
                    r.codim,
                    r.kappa,
                    r.classification.as_str()
                );
            }
            s
        }
    })
}

fn render_table(d: i64, fmt: Format) -> Result<String> {
    let row = component_table(d)?;
    Ok(match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct Rec<'a> {
                d: i64,
                count: usize,
                codims: &'a [i128],
                notation: String,
            }
            to_json(&Rec { d, count: row.count, codims: &row.codims, notation: row.notation() })
        }
        Format::Csv => to_csv(&["d", "codims", "count"], &[vec![d.to_string(), row.notation(), row.count.to_string()]]),
        Format::Text => format!("{d}  {}  {}\n", row.notation(), row.count),
    })
}

fn render_quartics(fmt: Format) -> Result<String> {
    let divisors = quartic_divisor_degrees()?;
    Ok(match fmt {
        Format::Json => to_json(&divisors),
        Format::Csv => {
            let rows: Vec<Vec<String>> = divisors
                .iter()
                .map(|q| {
                    vec![
                        q.label.clone(),
                        seq(&q.a),
                        seq(&q.b),
                        q.curve_degree.to_string(),
                        q.curve_genus.to_string(),
                        q.delta.to_string(),
                        q.coset.to_string(),
                        q.degree.to_string(),
                    ]
                })
                .collect();
            to_csv(&["label", "a", "b", "d_C", "g_C", "delta", "coset", "degree"], &rows)
        }
        Format::Text => {
            let mut s = String::new();
            for q in &divisors {
                let _ = writeln!(
                    s,
                    "{}  a={} b={}  d_C={} g_C={}  delta={} coset={}  degree={}",
                    q.label,
                    fmt_seq(&q.a),
                    fmt_seq(&q.b),
                    q.curve_degree,
                    q.curve_genus,
                    q.delta,
                    q.coset,
                    q.degree
                );
            }
            s
        }
    })
}

fn render_conjecture(d_max: i64, fmt: Format) -> Result<(String, Outcome)> {
    let report = verify_conjecture(d_max)?;
    let outcome = if report.passed() { Outcome::Success } else { Outcome::VerificationFailed };
    let text = match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct Rec<'a> {
                d_max: i64,
                passed: bool,
                classes: usize,
                cells: &'a [crate::cohomology::ConjectureCell],
            }
            to_json(&Rec { d_max, passed: report.passed(), classes: report.total_classes(), cells: &report.cells })
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .cells
                .iter()
                .map(|c| {
                    vec![
                        c.d.to_string(),
                        c.t.to_string(),
                        c.classes.to_string(),
                        c.min_dim.to_string(),
                        c.max_dim.to_string(),
                        c.passed().to_string(),
                        c.counterexamples.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
                    ]
                })
                .collect();
            to_csv(&["d", "t", "classes", "min_dim", "max_dim", "pass", "counterexamples"], &rows)
        }
        Format::Text => {
            let mut s = String::new();
            for d in 3..=d_max {
                let cells: Vec<_> = report.cells.iter().filter(|c| c.d == d).collect();
                let classes: usize = cells.iter().map(|c| c.classes).sum();
                let failed: Vec<_> = cells.iter().filter(|c| !c.passed()).collect();
                let _ = writeln!(
                    s,
                    "d={d:<3} classes={classes:<8} {}",
                    if failed.is_empty() {
                        "pass".to_string()
                    } else {
                        format!("FAIL at t={:?}", failed.iter().map(|c| c.t).collect::<Vec<_>>())
                    }
                );
                for c in failed {
                    for p in &c.counterexamples {
                        let _ = writeln!(s, "  counterexample t={}: {p}", c.t);
                    }
                }
            }
            let _ = writeln!(
                s,
                "{}: {} classes checked for d <= {d_max}",
                if report.passed() { "PASS" } else { "FAIL" },
                report.total_classes()
            );
            s
        }
    };
    Ok((text, outcome))
}

fn check_matrix_degree(d: i64) -> Result<()> {
    if d > MAX_DET_SIZE as i64 {
        return Err(Error::InvalidArgument(format!(
            "degree {d} admits matrices larger than {MAX_DET_SIZE}x{MAX_DET_SIZE}"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct OracleRecord {
    a: Vec<i64>,
    b: Vec<i64>,
    t: usize,
    dim: i128,
    rank: usize,
    oracle_dim: i128,
    seed_used: u64,
    modulus: u64,
    #[serde(rename = "match")]
    matches: bool,
}

fn render_oracle(d: i64, modulus: u64, seed: u64, fmt: Format) -> Result<(String, Outcome)> {
    let classes = enumerate_classes(d)?;
    check_matrix_degree(d)?;
    let mut recs = Vec::with_capacity(classes.len());
    for c in &classes {
        let p = &c.representative;
        let jr = jacobian_rank(p, modulus, seed)?;
        let dim = dim_det(p)?;
        recs.push(OracleRecord {
            a: p.a().to_vec(),
            b: p.b().to_vec(),
            t: p.len(),
            dim,
            rank: jr.rank,
            oracle_dim: jr.dim(),
            seed_used: jr.seed_used,
            modulus,
            matches: jr.dim() == dim,
        });
    }
    let outcome = if recs.iter().all(|r| r.matches) { Outcome::Success } else { Outcome::VerificationFailed };
    let text = match fmt {
        Format::Json => to_json(&recs),
        Format::Csv => {
            let rows: Vec<Vec<String>> = recs
                .iter()
                .map(|r| {
                    vec![
                        seq(&r.a),
                        seq(&r.b),
                        r.t.to_string(),
                        r.dim.to_string(),
                        r.rank.to_string(),
                        r.oracle_dim.to_string(),
                        r.seed_used.to_string(),
                        r.modulus.to_string(),
                        r.matches.to_string(),
                    ]
                })
                .collect();
            to_csv(&["a", "b", "t", "dim", "rank", "oracle_dim", "seed_used", "modulus", "match"], &rows)
        }
        Format::Text => {
            let mut s = String::new();
            for r in &recs {
                let _ = writeln!(
                    s,
                    "{:<28} dim={:<6} rank-1={:<6} {}",
                    format!("a={} b={}", fmt_seq(&r.a), fmt_seq(&r.b)),
                    r.dim,
                    r.oracle_dim,
                    if r.matches { "ok" } else { "MISMATCH" }
                );
            }
            s
        }
    };
    Ok((text, outcome))
}

fn render_fermat(d: i64, modulus: Option<u64>, fmt: Format) -> Result<(String, Outcome)> {
    let opts = EnumerationOptions { include_unreduced: false, transpose_dedup: false };
    let classes = enumerate_classes_with(d, opts)?;
    check_matrix_degree(d)?;
    let modulus = modulus.unwrap_or_else(|| default_fermat_modulus(d as u32));
    #[derive(Serialize)]
    struct Rec {
        a: Vec<i64>,
        b: Vec<i64>,
        t: usize,
        modulus: u64,
        ok: bool,
    }
    let recs = classes
        .iter()
        .map(|c| {
            let p = &c.representative;
            Ok(Rec { a: p.a().to_vec(), b: p.b().to_vec(), t: p.len(), modulus, ok: fermat_check(p, modulus)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let outcome = if recs.iter().all(|r| r.ok) { Outcome::Success } else { Outcome::VerificationFailed };
    let text = match fmt {
        Format::Json => to_json(&recs),
        Format::Csv => {
            let rows: Vec<Vec<String>> = recs
                .iter()
                .map(|r| vec![seq(&r.a), seq(&r.b), r.t.to_string(), r.modulus.to_string(), r.ok.to_string()])
                .collect();
            to_csv(&["a", "b", "t", "modulus", "ok"], &rows)
        }
        Format::Text => {
            let mut s = String::new();
            for r in &recs {
                let _ = writeln!(
                    s,
                    "a={} b={}  det = x^{d}+y^{d}+z^{d}+w^{d} mod {}: {}",
                    fmt_seq(&r.a),
                    fmt_seq(&r.b),
                    r.modulus,
                    if r.ok { "ok" } else { "FAIL" }
                );
            }
            s
        }
    };
    Ok((text, outcome))
}
