//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 on a failed check or numerical
//! failure, 2 on a usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::graph::{build_complete_multipartite, multipartite_quotient, EdgeLocus, PartitionSpec};
use crate::poly::{largest_real_root, tripartite_g};
use crate::spectra::{adjacency_spectrum, eig_quotient};
use crate::verify::{
    closed_form_suite, interlacing_suite, lemma31_residual, lemma34_residual, lemma41_residual,
    lembound_suite, monotonicity_suite, observe_sign, resolvent_suite, soundness_suite,
    sweep_theorem, verify_case_analyses, Condition, EnergyComparison, SuiteReport, SweepConfig,
    SweepReport, DEFAULT_SIGN_TOL,
};

pub const DEFAULT_SEED: u64 = 42;

pub const CSV_HEADER: [&str; 8] = [
    "spec", "locus", "energy_g", "energy_ge", "delta", "predicted", "observed", "margin",
];

/// Identifiers accepted by `verify`.
pub const VERIFY_IDS: [&str; 13] = [
    "lemma2.1", "thm2.2", "lemma2.3", "lemma2.4", "lemma2.5", "lemma3.1", "lemma3.3", "lemma3.4",
    "lemma4.1", "lemma4.3", "lemma4.4", "thm1", "closed-form",
];

#[derive(Debug, Parser)]
#[command(name = "mpenergy", version, about = "Energy of complete multipartite graphs under edge deletion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy, lambda_1 and lambda_2 of K_{t_1,...,t_k}, by eigensolve and by quotient
    Energy {
        /// Part sizes, e.g. 1,3,1
        spec: String,
        /// Largest accepted gap between the two computation routes
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Predicted and observed energy change for deleting one edge
    Compare {
        spec: String,
        /// Two part indices, 0-based, in the order the parts were given
        #[arg(long)]
        locus: String,
        #[arg(long = "sign-tol", default_value_t = DEFAULT_SIGN_TOL)]
        sign_tol: f64,
    },
    /// Every partition of every n in [3, nmax] and every locus
    Sweep {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Only {1, i, n-i-1} with the edge between the 1-part and the i-part
        #[arg(long = "tripartite-only")]
        tripartite_only: bool,
        #[arg(long = "sign-tol", default_value_t = DEFAULT_SIGN_TOL)]
        sign_tol: f64,
    },
    /// Run a named check
    Verify {
        /// One of: lemma2.1 thm2.2 lemma2.3 lemma2.4 lemma2.5 lemma3.1 lemma3.3
        /// lemma3.4 lemma4.1 lemma4.3 lemma4.4 thm1 closed-form
        id: String,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long = "sign-tol", default_value_t = DEFAULT_SIGN_TOL)]
        sign_tol: f64,
    },
}

enum Failure {
    Usage(String),
    Check,
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPartition(_)
            | Error::InvalidLocus(_)
            | Error::InvalidEdge(..)
            | Error::OutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Numeric(format!("i/o: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Energy { spec, tol } => cmd_energy(&spec, tol, out),
        Command::Compare { spec, locus, sign_tol } => cmd_compare(&spec, &locus, sign_tol, out),
        Command::Sweep {
            nmax,
            format,
            out: path,
            workers,
            tripartite_only,
            sign_tol,
        } => {
            let config = SweepConfig {
                n_max: nmax,
                sign_tolerance: sign_tol,
                tripartite_only,
                workers,
            };
            cmd_sweep(&config, format, path, out, err)
        }
        Command::Verify {
            id,
            trials,
            seed,
            nmax,
            sign_tol,
        } => cmd_verify(&id, trials, seed, nmax, sign_tol, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPartition(format!("bad part size {tok:?} in {text:?}")))
        })
        .collect()
}

/// Spec from a typed part list, and for each typed position its index in
/// canonical (non-increasing) order.
pub fn parse_spec(text: &str) -> Result<(PartitionSpec, Vec<usize>)> {
    let raw = parse_parts(text)?;
    let spec = PartitionSpec::new(raw.clone())?;
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[b].cmp(&raw[a]).then(a.cmp(&b)));
    let mut canonical = vec![0; raw.len()];
    for (pos, &typed) in order.iter().enumerate() {
        canonical[typed] = pos;
    }
    Ok((spec, canonical))
}

/// `--locus a,b` against the typed part order, mapped to canonical indices.
pub fn parse_locus(text: &str, canonical: &[usize]) -> Result<EdgeLocus> {
    let typed: EdgeLocus = text.parse()?;
    let map = |p: usize| {
        canonical.get(p).copied().ok_or_else(|| {
            Error::InvalidLocus(format!("part index {p} out of range for {} parts", canonical.len()))
        })
    };
    EdgeLocus::new(map(typed.part_a)?, map(typed.part_b)?)
}

/// `%.{digits}g`-style formatting.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        return format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn cmd_energy(text: &str, tol: f64, out: &mut dyn Write) -> CmdResult {
    if !(tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {tol}")));
    }
    let (spec, _) = parse_spec(text)?;
    let spectrum = adjacency_spectrum(&build_complete_multipartite(&spec))?;
    let energy = spectrum.energy();
    let lambda1 = eig_quotient(&multipartite_quotient(&spec))?.values[0];
    let via_quotient = 2.0 * lambda1;
    writeln!(out, "spec = {spec}")?;
    writeln!(out, "E = {energy:.9}")?;
    writeln!(out, "lambda1 = {:.9}", spectrum.lambda(1))?;
    writeln!(out, "lambda2 = {:.9}", spectrum.lambda(2))?;
    writeln!(out, "2 lambda(Q) = {via_quotient:.9}")?;
    let mut gap = (energy - via_quotient).abs();
    writeln!(out, "difference = {gap:.3e}")?;
    if spec.k() == 3 && spec.parts().contains(&1) {
        let p = spec.parts();
        let one = p.iter().rposition(|&t| t == 1).expect("has a 1-part");
        let rest: Vec<i64> = (0..3).filter(|&j| j != one).map(|j| p[j] as i64).collect();
        let tau = largest_real_root(&tripartite_g(rest[0], rest[1]).to_f64())?;
        let d = (energy - tau).abs();
        writeln!(out, "tau(g) = {tau:.9}")?;
        writeln!(out, "tau difference = {d:.3e}")?;
        gap = gap.max(d);
    }
    if gap > tol {
        writeln!(out, "routes disagree beyond {tol:e}")?;
        return Err(Failure::Check);
    }
    Ok(())
}

fn table_header(out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "{:<16} {:<6} {:>14} {:>14} {:>14} {:<9} {:<12} {:>10}",
        "spec", "locus", "E(G)", "E(G-e)", "delta", "predicted", "observed", "margin"
    )
}

fn table_row(out: &mut dyn Write, r: &EnergyComparison) -> io::Result<()> {
    writeln!(
        out,
        "{:<16} {:<6} {:>14.9} {:>14.9} {:>14.9} {:<9} {:<12} {:>10.3e}{}",
        r.spec.to_string(),
        r.locus.to_string(),
        r.energy_g,
        r.energy_g_minus_e,
        r.delta,
        r.predicted.to_string(),
        r.observed.to_string(),
        r.margin,
        if r.numeric_only { "  (numeric only)" } else { "" }
    )
}

fn cmd_compare(text: &str, locus: &str, sign_tol: f64, out: &mut dyn Write) -> CmdResult {
    let (spec, canonical) = parse_spec(text)?;
    let locus = parse_locus(locus, &canonical)?;
    let row = observe_sign(&spec, locus, sign_tol)?;
    table_header(out)?;
    table_row(out, &row)?;
    if row.agrees() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

/// Write a sweep report in the requested format.
pub fn write_report(report: &SweepReport, format: Format, out: &mut dyn Write) -> Result<(), String> {
    let io = |e: io::Error| e.to_string();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER).map_err(|e| e.to_string())?;
            for r in &report.rows {
                w.write_record([
                    r.spec.to_string(),
                    r.locus.to_string(),
                    fmt_sig(r.energy_g, 12),
                    fmt_sig(r.energy_g_minus_e, 12),
                    fmt_sig(r.delta, 12),
                    r.predicted.to_string(),
                    r.observed.to_string(),
                    fmt_sig(r.margin, 12),
                ])
                .map_err(|e| e.to_string())?;
            }
            w.flush().map_err(io)?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report).map_err(|e| e.to_string())?;
            writeln!(out).map_err(io)?;
        }
        Format::Table => {
            table_header(out).map_err(io)?;
            for r in &report.rows {
                table_row(out, r).map_err(io)?;
            }
        }
    }
    Ok(())
}

fn summary_line(report: &SweepReport) -> String {
    let s = report.summary;
    format!(
        "{}: {} cases, {} agree, {} disagree, {} inconclusive, min margin {:.3e}",
        report.name,
        s.total,
        s.agree,
        s.disagree,
        s.inconclusive,
        report.min_margin()
    )
}

fn cmd_sweep(
    config: &SweepConfig,
    format: Format,
    path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let report = sweep_theorem(config)?;
    match path {
        Some(p) => {
            let mut f = io::BufWriter::new(File::create(&p)?);
            write_report(&report, format, &mut f).map_err(Failure::Numeric)?;
            f.flush()?;
            writeln!(out, "{}", summary_line(&report))?;
        }
        None => {
            write_report(&report, format, out).map_err(Failure::Numeric)?;
            writeln!(err, "{}", summary_line(&report))?;
        }
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn print_suite(out: &mut dyn Write, r: &SuiteReport) -> CmdResult {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{}: {status} ({} checks, {} failed)", r.name, r.checked, r.failed)?;
    if !r.note.is_empty() {
        writeln!(out, "  {}", r.note)?;
    }
    for f in &r.failures {
        writeln!(out, "  {f}")?;
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn print_sweep(out: &mut dyn Write, r: &SweepReport) -> CmdResult {
    let status = if r.is_clean() && r.summary.total > 0 { "PASS" } else { "FAIL" };
    writeln!(out, "{status} {}", summary_line(r))?;
    for row in r.rows.iter().filter(|row| !row.agrees()) {
        table_row(out, row)?;
    }
    if status == "PASS" {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_verify(
    id: &str,
    trials: Option<usize>,
    seed: u64,
    nmax: Option<usize>,
    sign_tol: f64,
    out: &mut dyn Write,
) -> CmdResult {
    let nmax_or = |d: usize| nmax.unwrap_or(d);
    match id {
        "lemma2.1" => print_suite(out, &interlacing_suite(trials.unwrap_or(200), seed, nmax_or(10))?),
        "thm2.2" | "lemma2.3" | "lemma2.5" => {
            let conditions: &[Condition] = match id {
                "thm2.2" => &[Condition::EdgeSubset],
                "lemma2.3" => &[Condition::Perron],
                _ => &[Condition::Cond1, Condition::Cond2],
            };
            let n = nmax_or(12);
            check_full_range(n)?;
            print_suite(out, &soundness_suite(n, sign_tol, conditions)?)
        }
        "lemma2.4" => {
            let n = nmax_or(30);
            check_range(n, 5, 60)?;
            print_suite(out, &lembound_suite(n)?)
        }
        "lemma3.1" => print_sweep(out, &lemma31_residual(sign_tol)?),
        "lemma3.3" => {
            let n = nmax_or(12);
            check_full_range(n)?;
            print_suite(out, &monotonicity_suite(n)?)
        }
        "lemma3.4" => print_sweep(out, &lemma34_residual(sign_tol)?),
        "lemma4.1" => print_sweep(out, &lemma41_residual(sign_tol)?),
        "lemma4.3" => print_suite(out, &resolvent_suite(trials.unwrap_or(500), seed)?),
        "lemma4.4" => {
            let n = nmax_or(30) as i64;
            let report = verify_case_analyses(1..=n, 1..=n)?;
            let failed = report.failures().count();
            let status = if report.passed() && !report.rows.is_empty() { "PASS" } else { "FAIL" };
            writeln!(out, "case analyses: {status} ({} cases, {failed} failed)", report.rows.len())?;
            for row in report.failures() {
                writeln!(out, "  case {} i = {} t = {}: {}", row.case, row.i, row.t, row.detail)?;
            }
            if status == "PASS" {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        "thm1" => {
            let mut config = SweepConfig::new(nmax_or(12));
            config.sign_tolerance = sign_tol;
            print_sweep(out, &sweep_theorem(&config)?)
        }
        "closed-form" => {
            let n = nmax_or(39);
            check_range(n, 2, 49)?;
            print_suite(out, &closed_form_suite(n)?)
        }
        other => Err(Failure::Usage(format!(
            "unknown check {other:?}; expected one of {}",
            VERIFY_IDS.join(", ")
        ))),
    }
}

fn check_range(n: usize, lo: usize, hi: usize) -> CmdResult {
    if (lo..=hi).contains(&n) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("nmax must lie in [{lo}, {hi}], got {n}")))
    }
}

fn check_full_range(n: usize) -> CmdResult {
    check_range(n, 3, crate::verify::MAX_FULL_NMAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mpenergy").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(fmt_sig(4.0, 12), "4");
        assert_eq!(fmt_sig(2f64.sqrt() * 2.0, 12), "2.82842712475");
        assert_eq!(fmt_sig(-0.1171573, 12), "-0.1171573");
        assert_eq!(fmt_sig(1.5e-9, 12), "1.5e-09");
        assert_eq!(fmt_sig(123456789012345.0, 12), "1.23456789012e+14");
        assert_eq!(fmt_sig(9.9999999999999, 12), "10");
        assert_eq!(fmt_sig(0.0, 12), "0");
    }

    #[test]
    fn typed_order_locus_mapping() {
        let (spec, canonical) = parse_spec("1,2,2").unwrap();
        assert_eq!(spec.parts(), &[2, 2, 1]);
        assert_eq!(canonical, vec![2, 0, 1]);
        let l = parse_locus("0,1", &canonical).unwrap();
        assert_eq!(l.sizes(&spec), (2, 1));
        assert!(parse_locus("0,3", &canonical).is_err());
        assert!(parse_locus("1,1", &canonical).is_err());
        assert!(parse_spec("1,x").is_err());
    }

    #[test]
    fn energy_command() {
        let (code, out, _) = run_capture(&["energy", "1,3,1"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "E = 6.000000000"), "{out}");
        assert!(out.contains("tau(g) = 6.000000000"));
        let (code, out, _) = run_capture(&["energy", "2,3"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "E = 4.898979486"), "{out}");
        assert_eq!(run_capture(&["energy", "1"]).0, 2);
        assert_eq!(run_capture(&["energy", "2,0"]).0, 2);
    }

    #[test]
    fn compare_command() {
        let (code, out, _) = run_capture(&["compare", "1,2,2", "--locus", "0,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("decrease  decrease"), "{out}");
        let (code, out, _) = run_capture(&["compare", "3,3", "--locus", "0,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("increase  increase") && out.contains("numeric only"), "{out}");
        assert_eq!(run_capture(&["compare", "2,2", "--locus", "0,0"]).0, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["sweep", "--nmax", "100"]).0, 2);
        assert_eq!(run_capture(&["sweep", "--nmax", "2"]).0, 2);
        assert_eq!(run_capture(&["sweep", "--nmax", "5", "--workers", "0"]).0, 2);
        assert_eq!(run_capture(&["verify", "lemma9.9"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("sweep"));
    }
}
