//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or validation
//! error. Big integers are rendered as decimal strings in JSON.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::dims::{self, is_prime_power, max_degree, CodeParams, UInt};
use crate::error::Error;
use crate::ghw;
use crate::macaulay::{decompose, QParam};
use crate::oracle::{self, Caps};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Sort all admissible tuples and read off e_bar.
    Lex,
    /// Search every subcode of an explicit generator matrix.
    Exhaustive,
    /// Compare every dimension formula with direct counting.
    Dims,
}

/// Inclusive integer range written `lo..hi` or a single value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<i64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid range bound {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(lo..=hi))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rmghw",
    version,
    about = "Dimensions and generalized Hamming weights of q-ary Reed-Muller codes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Write output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension rho_q(d, m) of RM(d, m).
    Dim {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// d-th Macaulay representation of n with respect to q (or "inf").
    Macaulay {
        #[arg(long)]
        n: UInt,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        q: QParam,
    },
    /// The r-th generalized Hamming weight d_r and e_bar_r.
    Ghw {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: BigInt,
    },
    /// The full weight hierarchy d_1 < ... < d_k.
    Hierarchy {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Hierarchies over parameter ranges, e.g. `--q 2..4 --m 1..3`.
    /// Values of q that are not prime powers are skipped; d defaults to
    /// every degree 1..=m(q-1).
    Table {
        #[arg(long)]
        q: Span,
        #[arg(long)]
        m: Span,
        #[arg(long)]
        d: Option<Span>,
    },
    /// Compare the Macaulay-based results against an independent oracle.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum)]
        oracle: OracleKind,
        /// Check a single rank instead of all ranks.
        #[arg(long)]
        r: Option<u64>,
        /// Maximum number of subspaces the exhaustive oracle may visit.
        #[arg(long)]
        cap: Option<u64>,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };

    let result = match &cli.out {
        Some(path) => File::create(path).map_err(Failure::Io).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = execute(&cli.command, cli.format, &mut w)?;
            w.flush()?;
            Ok(code)
        }),
        None => execute(&cli.command, cli.format, stdout),
    };
    match result {
        Ok(code) => code,
        // Downstream closed the pipe (e.g. `| head`); nothing left to report.
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: &Command, format: OutputFormat, w: &mut dyn Write) -> Outcome {
    match *cmd {
        Command::Dim { q, d, m } => cmd_dim(q, d, m, format, w),
        Command::Macaulay { ref n, d, q } => cmd_macaulay(n, d, q, format, w),
        Command::Ghw { q, d, m, ref r } => cmd_ghw(q, d, m, r, format, w),
        Command::Hierarchy { q, d, m } => cmd_hierarchy(q, d, m, format, w),
        Command::Table {
            ref q,
            ref m,
            ref d,
        } => cmd_table(q, m, d.as_ref(), format, w),
        Command::Verify {
            q,
            d,
            m,
            oracle,
            r,
            cap,
        } => cmd_verify(q, d, m, oracle, r, cap, format, w),
    }
}

fn emit_json(w: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(w, "{v}")?;
    Ok(EXIT_OK)
}

fn params_json(q: u64, d: i64, m: i64) -> Value {
    json!({ "q": q, "d": d, "m": m })
}

fn strings(values: &[UInt]) -> Vec<String> {
    values.iter().map(UInt::to_string).collect()
}

fn cmd_dim(q: u64, d: i64, m: i64, format: OutputFormat, w: &mut dyn Write) -> Outcome {
    let rho = dims::rho(q, d, m)?;
    match format {
        OutputFormat::Plain => writeln!(w, "{rho}")?,
        OutputFormat::Csv => writeln!(w, "q,d,m,rho\n{q},{d},{m},{rho}")?,
        OutputFormat::Json => {
            return emit_json(
                w,
                &json!({ "params": params_json(q, d, m), "rho": rho.to_string() }),
            )
        }
    }
    Ok(EXIT_OK)
}

fn cmd_macaulay(n: &UInt, d: i64, q: QParam, format: OutputFormat, w: &mut dyn Write) -> Outcome {
    let rep = decompose(n, d, q)?;
    let terms = rep.terms();
    match format {
        OutputFormat::Plain => writeln!(w, "{rep}")?,
        OutputFormat::Csv => {
            writeln!(w, "i,m_i,term")?;
            for ((c, t), i) in rep.coeffs().iter().zip(&terms).zip((1..=d).rev()) {
                writeln!(w, "{i},{c},{t}")?;
            }
        }
        OutputFormat::Json => {
            let q_json = match q {
                QParam::Finite(q) => json!(q),
                QParam::Infinity => json!("inf"),
            };
            let sum: UInt = terms.iter().sum();
            return emit_json(
                w,
                &json!({
                    "q": q_json,
                    "d": d,
                    "n": n.to_string(),
                    "coeffs": rep.coeffs(),
                    "terms": strings(&terms),
                    "sum": sum.to_string(),
                }),
            );
        }
    }
    Ok(EXIT_OK)
}

fn rank_arg(params: &CodeParams, r: &BigInt) -> Result<UInt, Error> {
    if !r.is_positive() {
        return Err(Error::RankOutOfRange {
            r: r.to_string(),
            rho: params.rho().to_string(),
        });
    }
    Ok(r.magnitude().clone())
}

fn cmd_ghw(q: u64, d: i64, m: i64, r: &BigInt, format: OutputFormat, w: &mut dyn Write) -> Outcome {
    let params = CodeParams::new(q, d, m)?;
    let r = rank_arg(&params, r)?;
    let e_bar = ghw::e_bar(&params, r.clone())?;
    let d_r = params.length() - &e_bar;
    match format {
        OutputFormat::Plain => writeln!(w, "d_r = {d_r} (e_bar = {e_bar})")?,
        OutputFormat::Csv => writeln!(w, "q,d,m,r,d_r,e_bar\n{q},{d},{m},{r},{d_r},{e_bar}")?,
        OutputFormat::Json => {
            return emit_json(
                w,
                &json!({
                    "params": params_json(q, d, m),
                    "rho": params.rho().to_string(),
                    "r": r.to_string(),
                    "d_r": d_r.to_string(),
                    "e_bar": e_bar.to_string(),
                }),
            )
        }
    }
    Ok(EXIT_OK)
}

fn hierarchy_json(h: &ghw::WeightHierarchy) -> Value {
    let p = h.params();
    json!({
        "params": params_json(p.q(), p.d(), p.m()),
        "rho": p.rho().to_string(),
        "weights": strings(h.weights()),
    })
}

fn cmd_hierarchy(q: u64, d: i64, m: i64, format: OutputFormat, w: &mut dyn Write) -> Outcome {
    let params = CodeParams::new(q, d, m)?;
    let h = ghw::hierarchy(&params)?;
    match format {
        OutputFormat::Plain => writeln!(w, "{}", strings(h.weights()).join(" "))?,
        OutputFormat::Csv => {
            writeln!(w, "r,d_r")?;
            for (r, weight) in h.weights().iter().enumerate() {
                writeln!(w, "{},{weight}", r + 1)?;
            }
        }
        OutputFormat::Json => return emit_json(w, &hierarchy_json(&h)),
    }
    Ok(EXIT_OK)
}

fn cmd_table(
    q: &Span,
    m: &Span,
    d: Option<&Span>,
    format: OutputFormat,
    w: &mut dyn Write,
) -> Outcome {
    if *q.0.start() < 2 {
        return Err(Error::NotPrimePower(*q.0.start().max(&0) as u64).into());
    }
    if *m.0.start() < 1 {
        return Err(Error::InvalidM {
            m: *m.0.start(),
            min: 1,
        }
        .into());
    }
    if format == OutputFormat::Csv {
        writeln!(w, "q,d,m,r,d_r")?;
    }
    let mut codes = Vec::new();
    for q in q.0.clone().map(|q| q as u64).filter(|&q| is_prime_power(q)) {
        for m in m.0.clone() {
            let top = max_degree(q, m);
            let degrees = match d {
                Some(span) => (*span.0.start()).max(1)..=(*span.0.end()).min(top),
                None => 1..=top,
            };
            for d in degrees {
                let params = CodeParams::new(q, d, m)?;
                let h = ghw::hierarchy(&params)?;
                match format {
                    OutputFormat::Csv => {
                        for (r, weight) in h.weights().iter().enumerate() {
                            writeln!(w, "{q},{d},{m},{},{weight}", r + 1)?;
                        }
                    }
                    OutputFormat::Plain => {
                        writeln!(w, "q={q} d={d} m={m}: {}", strings(h.weights()).join(" "))?
                    }
                    OutputFormat::Json => codes.push(hierarchy_json(&h)),
                }
            }
        }
    }
    if format == OutputFormat::Json {
        return emit_json(w, &json!({ "codes": codes }));
    }
    Ok(EXIT_OK)
}

struct Comparison {
    label: String,
    theorem: UInt,
    oracle: UInt,
}

impl Comparison {
    fn ok(&self) -> bool {
        self.theorem == self.oracle
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    q: u64,
    d: i64,
    m: i64,
    kind: OracleKind,
    r: Option<u64>,
    cap: Option<u64>,
    format: OutputFormat,
    w: &mut dyn Write,
) -> Outcome {
    let mut caps = Caps::default();
    if let Some(cap) = cap {
        caps.max_subspaces = cap;
    }
    match kind {
        OracleKind::Dims => verify_dims(q, d, m, &caps, format, w),
        OracleKind::Lex | OracleKind::Exhaustive => {
            let params = CodeParams::new(q, d, m)?;
            let rho = params.rho();
            let ranks: Vec<u64> = match r {
                Some(r) => {
                    if r < 1 || UInt::from(r) > rho {
                        return Err(Error::RankOutOfRange {
                            r: r.to_string(),
                            rho: rho.to_string(),
                        }
                        .into());
                    }
                    vec![r]
                }
                None => {
                    let k = rho
                        .to_u64()
                        .filter(|&k| k <= caps.max_rows)
                        .ok_or_else(|| Error::CapExceeded {
                            what: "rank",
                            count: rho.to_string(),
                            cap: caps.max_rows.to_string(),
                        })?;
                    (1..=k).collect()
                }
            };
            let comparisons = if kind == OracleKind::Lex {
                let lex = oracle::e_bar_lex_all(&params, &caps)?;
                ranks
                    .iter()
                    .map(|&r| {
                        Ok(Comparison {
                            label: r.to_string(),
                            theorem: ghw::e_bar(&params, r)?,
                            oracle: lex[(r - 1) as usize].clone(),
                        })
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            } else {
                ranks
                    .iter()
                    .map(|&r| {
                        Ok(Comparison {
                            label: r.to_string(),
                            theorem: ghw::ghw(&params, r)?,
                            oracle: oracle::min_subspace_support(&params, r, &caps)?,
                        })
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            };
            report(kind, &params, &comparisons, format, w)
        }
    }
}

fn kind_name(kind: OracleKind) -> &'static str {
    match kind {
        OracleKind::Lex => "lex",
        OracleKind::Exhaustive => "exhaustive",
        OracleKind::Dims => "dims",
    }
}

fn report(
    kind: OracleKind,
    params: &CodeParams,
    comparisons: &[Comparison],
    format: OutputFormat,
    w: &mut dyn Write,
) -> Outcome {
    let pass = comparisons.iter().all(Comparison::ok);
    let code = if pass { EXIT_OK } else { EXIT_MISMATCH };
    let quantity = if kind == OracleKind::Lex {
        "e_bar"
    } else {
        "d_r"
    };
    match format {
        OutputFormat::Plain => {
            for c in comparisons.iter().filter(|c| !c.ok()) {
                writeln!(
                    w,
                    "FAIL r={}: {quantity} theorem = {}, oracle = {}",
                    c.label, c.theorem, c.oracle
                )?;
            }
            match (kind, pass) {
                (OracleKind::Exhaustive, true) => {
                    for c in comparisons {
                        writeln!(w, "PASS d_{} = {}", c.label, c.theorem)?;
                    }
                }
                (_, true) => writeln!(w, "PASS ({} ranks checked)", comparisons.len())?,
                (_, false) => {
                    let bad = comparisons.iter().filter(|c| !c.ok()).count();
                    writeln!(w, "FAIL ({bad} of {} ranks mismatched)", comparisons.len())?
                }
            }
        }
        OutputFormat::Csv => {
            writeln!(w, "r,theorem,oracle,match")?;
            for c in comparisons {
                writeln!(w, "{},{},{},{}", c.label, c.theorem, c.oracle, c.ok())?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = comparisons
                .iter()
                .map(|c| {
                    json!({
                        "r": c.label,
                        "theorem": c.theorem.to_string(),
                        "oracle": c.oracle.to_string(),
                        "match": c.ok(),
                    })
                })
                .collect();
            emit_json(
                w,
                &json!({
                    "oracle": kind_name(kind),
                    "quantity": quantity,
                    "params": params_json(params.q(), params.d(), params.m()),
                    "pass": pass,
                    "checked": comparisons.len(),
                    "results": rows,
                }),
            )?;
        }
    }
    Ok(code)
}

fn verify_dims(
    q: u64,
    d: i64,
    m: i64,
    caps: &Caps,
    format: OutputFormat,
    w: &mut dyn Write,
) -> Outcome {
    if m < 0 {
        return Err(Error::InvalidM { m, min: 0 }.into());
    }
    let mut methods: Vec<(&str, UInt)> = vec![
        ("inclusion_exclusion", dims::rho(q, d, m)?),
        ("recursive", dims::rho_recursive(q, d, m)?),
        ("count", oracle::count_reduced_monomials(q, d, m, caps)?),
    ];
    if (0..q as i64).contains(&d) {
        methods.push(("binomial", dims::rho_binomial(q, d, m)?));
    }
    let reference = methods[0].1.clone();
    let pass = methods.iter().all(|(_, v)| *v == reference);
    match format {
        OutputFormat::Plain => {
            if pass {
                writeln!(w, "PASS rho = {reference} by {} methods", methods.len())?;
            } else {
                for (name, v) in &methods {
                    writeln!(w, "{name}: {v}")?;
                }
                writeln!(w, "FAIL dimension methods disagree")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(w, "method,rho")?;
            for (name, v) in &methods {
                writeln!(w, "{name},{v}")?;
            }
        }
        OutputFormat::Json => {
            let values: serde_json::Map<String, Value> = methods
                .iter()
                .map(|(name, v)| (name.to_string(), json!(v.to_string())))
                .collect();
            emit_json(
                w,
                &json!({
                    "oracle": "dims",
                    "params": params_json(q, d, m),
                    "pass": pass,
                    "rho": values,
                }),
            )?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_MISMATCH })
}
