//! The `mocktheta` command line: series printing, identity verification,
//! involution audits, class enumeration and single-element traces.
//!
//! Exit codes are 0 on success, 1 when a verification or audit fails and 2
//! for usage errors, including inputs outside an involution's domain.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::{self, audit, Involution};
use crate::partition::{self, Bipartition, Partition, PartitionClass};
use crate::qseries::{builders, pochhammer, signed_interpretation, AnySeries, InterpretationId, QPochhammer};
use crate::verifier::{self, IdentityId, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mocktheta", version, about = "Exact checks of third order mock theta identities")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a truncated series.
    Series(SeriesArgs),
    /// Check identities coefficient by coefficient.
    Verify(VerifyArgs),
    /// Exhaustively audit an involution for every size up to a bound.
    Audit(AuditArgs),
    /// List the members of a partition class of one size.
    Enumerate(EnumerateArgs),
    /// Apply an involution to one bipartition.
    Trace(TraceArgs),
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// f, phi, psi, f_alpha, phi_alpha, psi_alpha, gauss, gauss_two_sided,
    /// fine_mid, fine_right, poch:<(a;b)_n>, or int:<INT_*>.
    pub name: String,
    #[arg(long, env = "MOCKTHETA_ORDER", default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    /// Use the `q -> -q` forms: `φ(-q)`, `ψ(-q)`, `φ(-αq;-q)`, `ψ(-αq;-q)`.
    #[arg(long)]
    pub twisted: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["id", "all"]))]
pub struct VerifyArgs {
    /// Identity tag; repeatable.
    #[arg(long, value_parser = parse_identity)]
    pub id: Vec<IdentityId>,
    /// Every registered identity.
    #[arg(long)]
    pub all: bool,
    /// Order for univariate identities.
    #[arg(long, env = "MOCKTHETA_ORDER", value_parser = clap::value_parser!(u32).range(1..))]
    pub order: Option<u32>,
    /// Order for bivariate identities. Defaults to `--order` when only that
    /// is given.
    #[arg(long, env = "MOCKTHETA_ORDER_BI", value_parser = clap::value_parser!(u32).range(1..))]
    pub order_bi: Option<u32>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(value_parser = parse_involution)]
    pub which: Involution,
    #[arg(long, default_value_t = 12)]
    pub n_max: u32,
    /// Also print one trace line per domain element.
    #[arg(long)]
    pub elements: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(value_parser = parse_class)]
    pub class: PartitionClass,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(value_parser = parse_involution)]
    pub which: Involution,
    /// Parts of λ, comma separated; empty for ∅.
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub lam: Partition,
    /// Parts of μ; a trailing 0 is the zero part.
    #[arg(long, value_parser = parse_partition, default_value = "")]
    pub mu: Partition,
    /// Give μ a zero part.
    #[arg(long)]
    pub mu_zero: bool,
}

fn parse_identity(s: &str) -> Result<IdentityId> {
    s.parse()
}

fn parse_involution(s: &str) -> Result<Involution> {
    s.parse()
}

fn parse_class(s: &str) -> Result<PartitionClass> {
    s.parse()
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

const DEFAULT_ORDER: usize = 100;
const DEFAULT_ORDER_BI: usize = 40;

/// Parses `args` (program name first) and runs the command, writing to
/// `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

enum Failure {
    Usage(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Series(a) => run_series(a, cli.format, out),
        Command::Verify(a) => run_verify(a, cli.format, out),
        Command::Audit(a) => run_audit(a, cli.format, out),
        Command::Enumerate(a) => run_enumerate(a, cli.format, out),
        Command::Trace(a) => run_trace(a, cli.format, out),
    }
}

fn json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}

/// Resolves a series name from the command line.
pub fn named_series(name: &str, order: usize, twisted: bool) -> Result<AnySeries> {
    let twist = |s: crate::qseries::Series| if twisted { s.twist_q_negate() } else { s };
    if let Some(text) = name.strip_prefix("poch:") {
        let p: QPochhammer = text.parse()?;
        return Ok(if p.uses_alpha() { p.biseries(order).into() } else { p.series(order)?.into() });
    }
    if let Some(tag) = name.strip_prefix("int:") {
        let id: InterpretationId = tag.parse()?;
        return Ok(signed_interpretation(id, order));
    }
    Ok(match name {
        "f" => twist(builders::mock_f(order)).into(),
        "phi" => twist(builders::mock_phi(order)).into(),
        "psi" => twist(builders::mock_psi(order)).into(),
        "f_alpha" => builders::mock_f_alpha(order, twisted).into(),
        "phi_alpha" => builders::mock_phi_alpha(order, twisted).into(),
        "psi_alpha" => builders::mock_psi_alpha(order, twisted).into(),
        "gauss" => builders::theta_gauss(order).into(),
        "gauss_two_sided" => builders::theta_gauss_two_sided(order).into(),
        "fine_mid" => builders::fine_mid(order).into(),
        "fine_right" => builders::fine_right(order).into(),
        "q_q_inf" => pochhammer::q_q_inf(order).into(),
        "neg_q_q_inf" => pochhammer::neg_q_q_inf(order).into(),
        _ => return Err(Error::Unknown { kind: "series", name: name.to_string() }),
    })
}

fn run_series(a: &SeriesArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let s = named_series(&a.name, a.order as usize, a.twisted)?;
    match format {
        Format::Text => writeln!(out, "{s}")?,
        Format::Json => writeln!(out, "{}", s.to_json())?,
    }
    Ok(EXIT_OK)
}

fn run_verify(a: &VerifyArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let order = a.order.map_or(DEFAULT_ORDER, |n| n as usize);
    let order_bi = a.order_bi.or(a.order).map_or(DEFAULT_ORDER_BI, |n| n as usize);
    let reports: Vec<VerifyReport> = if a.all {
        verifier::verify_all(order, order_bi)
    } else {
        let ws = verifier::Workshop::new();
        a.id.par_iter()
            .map(|&id| verifier::verify_with(&ws, id, if id.is_bivariate() { order_bi } else { order }))
            .collect()
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Json => json(out, &reports)?,
        Format::Text => {
            for r in &reports {
                let status = if r.passed() { "pass" } else { "FAIL" };
                writeln!(out, "{:<11} order {:>3}  {status}", r.id.tag(), r.order)?;
                if let Some(m) = &r.first_mismatch {
                    writeln!(out, "  first mismatch at q^{} ({}): left {} right {}", m.power, m.component, m.left, m.right)?;
                }
                if let Some(e) = &r.error {
                    writeln!(out, "  error: {e}")?;
                }
            }
            writeln!(out, "{} checked, {failed} failed", reports.len())?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn run_audit(a: &AuditArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let reports: Vec<_> = (0..=a.n_max).into_par_iter().map(|n| audit(a.which, n)).collect();
    let failed = reports.iter().any(|r| !r.passed());
    match format {
        Format::Json => json(out, &reports)?,
        Format::Text => {
            writeln!(out, "{} audit, n = 0..={}", a.which, a.n_max)?;
            writeln!(out, "{:>3} {:>8} {:>7} {:>8} {:>9} {:>10}", "n", "domain", "paired", "excluded", "survivors", "violations")?;
            for r in &reports {
                writeln!(
                    out,
                    "{:>3} {:>8} {:>7} {:>8} {:>9} {:>10}",
                    r.n,
                    r.domain_size,
                    r.paired_count,
                    r.excluded_total(),
                    r.survivor_count,
                    r.violations.len()
                )?;
            }
            for r in reports.iter().filter(|r| !r.passed()) {
                for v in &r.violations {
                    writeln!(out, "violation at n = {}: {}: {}", r.n, v.input, v.description)?;
                }
            }
            if a.elements {
                for n in 0..=a.n_max {
                    for x in a.which.domain(n) {
                        writeln!(out, "{}", involution::trace_line(a.which, &x)?)?;
                    }
                }
            }
            writeln!(out, "{}", if failed { "FAILED" } else { "ok" })?;
        }
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}

#[derive(Serialize)]
struct Listing<'a> {
    class: &'static str,
    n: u32,
    count: usize,
    partitions: &'a [String],
}

fn run_enumerate(a: &EnumerateArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let parts: Vec<String> = partition::enumerate(a.class, a.n).iter().map(|p| p.to_string()).collect();
    match format {
        Format::Json => {
            json(out, &Listing { class: a.class.tag(), n: a.n, count: parts.len(), partitions: &parts })?
        }
        Format::Text => {
            writeln!(out, "{} n={} count {}", a.class.tag(), a.n, parts.len())?;
            for p in &parts {
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_trace(a: &TraceArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let mu = if a.mu_zero { a.mu.with_part(0) } else { a.mu.clone() };
    let t = involution::trace(a.which, &Bipartition::new(a.lam.clone(), mu))?;
    match format {
        Format::Json => json(out, &t)?,
        Format::Text => write!(out, "{t}")?,
    }
    Ok(if t.round_trip == Some(false) { EXIT_FAIL } else { EXIT_OK })
}
