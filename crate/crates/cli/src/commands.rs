//! Command surface of the `mring` binary.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use mring_core::analysis::{dirichlet_shift_from, finite_values_unit_roots_demo};
use mring_core::cyclo::{cyclotomic_identity_check, is_phi_member, necklace_coeffs, phi_decompose};
use mring_core::endo::{endo_apply, endo_verify, LawCheck};
use mring_core::ghost::ghost;
use mring_core::json::to_json;
use mring_core::scalar::format_rational;
use mring_core::{CompletionElem, EndoSpec, MElem, Rational};

use crate::expr::{eval, parse, EvalError, ParseError};

pub const DEFAULT_LEVEL: u64 = 16;
pub const LEVEL_ENV: &str = "MRING_LEVEL";

#[derive(Debug, Parser)]
#[command(
    name = "mring",
    version,
    about = "Exact arithmetic with ratios of monic polynomials"
)]
pub struct Cli {
    /// Truncation level N (default 16, or $MRING_LEVEL).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub level: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ghost coordinates t_0..t_N.
    Ghost {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Necklace coefficients c_1..c_N.
    Necklace {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coordinates in the basis [x], [1 - x^-n].
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Whether every root is zero or a root of unity.
    Member {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Raise every root to the n-th power.
    Adams {
        #[arg(long)]
        n: u64,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    EndoApply {
        #[arg(long)]
        endo: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check the endomorphism laws on the given samples.
    EndoVerify {
        #[arg(long)]
        endo: String,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Compare x^d f(1/x) with prod (1 - x^n)^{c_n} through x^N.
    CycloIdentity {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Smallest q in [min-q, q] with max ||q x_j|| <= q^{-1/J}. Every
    /// q <= 2^J qualifies, so pass --min-q above that for a nontrivial shift.
    Dirichlet {
        #[arg(long, default_value_t = 10_000)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        min_q: u64,
        #[arg(required = true, allow_negative_numbers = true)]
        angles: Vec<f64>,
    },
    /// Distinct ghost values for 1 <= k <= K against membership.
    Demo {
        #[arg(long, default_value_t = 100)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error in {input:?}: {source}")]
    Parse { input: String, source: ParseError },
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Domain(#[from] mring_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 1,
            CliError::Eval(_) | CliError::Domain(_) => 2,
        }
    }
}

fn element(text: &str) -> Result<MElem, CliError> {
    let e = parse(text).map_err(|source| CliError::Parse {
        input: text.into(),
        source,
    })?;
    Ok(eval(&e)?)
}

fn endo_spec(text: &str) -> Result<EndoSpec, CliError> {
    let spec: EndoSpec = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("invalid --endo {text:?}: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

fn level(cli: &Cli) -> Result<usize, CliError> {
    let n = match (cli.level, std::env::var(LEVEL_ENV)) {
        (Some(n), _) => n,
        (None, Ok(v)) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                CliError::Usage(format!("{LEVEL_ENV} must be a positive integer, got {v:?}"))
            })?,
        (None, Err(_)) => DEFAULT_LEVEL,
    };
    usize::try_from(n).map_err(|_| CliError::Usage(format!("level {n} is too large")))
}

fn rationals(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn completion_text(ce: &CompletionElem) -> String {
    let parts: Vec<String> = ce
        .coeffs()
        .iter()
        .map(|(n, v)| format!("{n}: {v}"))
        .collect();
    format!("c0 = {}, c = {{{}}}", ce.c0(), parts.join(", "))
}

fn law_text(l: &LawCheck) -> String {
    match &l.witness {
        None => format!("{}: pass", l.law),
        Some(w) => format!("{}: FAIL (witness {w})", l.law),
    }
}

/// Output of one command: text and JSON renderings.
struct Output {
    text: String,
    json: String,
}

impl Output {
    fn new<T: Serialize + ?Sized>(text: String, value: &T) -> Result<Self, CliError> {
        Ok(Self {
            text,
            json: to_json(value)?,
        })
    }

    fn element(r: &MElem) -> Result<Self, CliError> {
        Self::new(r.to_string(), r)
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let n = level(cli)?;
    match &cli.command {
        Command::Ghost { expr } => {
            let g = ghost(&element(expr)?, n);
            Output::new(format!("t = {}", rationals(g.values())), &g)
        }
        Command::Necklace { expr } => {
            let c = necklace_coeffs(&element(expr)?, n);
            Output::new(format!("c = {}", rationals(c.values())), &c)
        }
        Command::Decompose { expr } => {
            let ce = phi_decompose(&element(expr)?)?;
            Output::new(completion_text(&ce), &ce)
        }
        Command::Member { expr } => {
            let m = is_phi_member(&element(expr)?)?;
            Output::new(m.to_string(), &m)
        }
        Command::Mul { a, b } => Output::element(&element(a)?.mul(&element(b)?)),
        Command::Add { a, b } => Output::element(&element(a)?.add(&element(b)?)),
        Command::Adams { n: k, expr } => Output::element(&element(expr)?.adams(*k)),
        Command::EndoApply { endo, expr } => {
            let spec = endo_spec(endo)?;
            Output::element(&endo_apply(&spec, &element(expr)?)?)
        }
        Command::EndoVerify { endo, exprs } => {
            let spec = endo_spec(endo)?;
            let samples = exprs
                .iter()
                .map(|e| element(e))
                .collect::<Result<Vec<_>, _>>()?;
            let report = endo_verify(&spec, &samples, n as u64)?;
            let lines: Vec<String> = report.iter().map(law_text).collect();
            Output::new(lines.join("\n"), &report)
        }
        Command::CycloIdentity { expr } => {
            let r = element(expr)?;
            if !r.den().is_one() {
                return Err(mring_core::Error::InvalidArgument(
                    "cyclo-identity takes a polynomial [f]".into(),
                )
                .into());
            }
            let ok = cyclotomic_identity_check(r.num(), n);
            Output::new(ok.to_string(), &ok)
        }
        Command::Dirichlet { q, min_q, angles } => {
            let found = dirichlet_shift_from(angles, *min_q, *q)?;
            Output::new(format!("q = {found}"), &found)
        }
        Command::Demo { k, expr } => {
            let d = finite_values_unit_roots_demo(&element(expr)?, *k)?;
            let text = format!(
                "values = {}, member = {}, consistent = {}",
                d.values, d.member, d.consistent
            );
            Output::new(text, &d)
        }
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_stdout = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if to_stdout {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 1;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.json { o.json } else { o.text };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
