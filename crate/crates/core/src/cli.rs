//! Command-line front end. Every command prints one JSON document; exit
//! status is 0 on success, 1 when a check fails and 2 for bad invocations
//! or unreadable input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::actions::{orbit_equiv_o, s3_act, SphereParam};
use crate::element::Element;
use crate::error::Error;
use crate::frames::{FramePair, OCT_NAMES};
use crate::hopf_zero::{
    retract, round_to_cert, search_exhaustive_with, search_numeric, verify_pair, CertJson, NumericConfig, ZeroDivisorCert,
};
use crate::mono::{oct_mono_from_alpha, oct_map};
use crate::report::{Check, Counterexample, Report};
use crate::scalar::Scalar;
use crate::suites::{run_suite, suite_names, SuiteConfig};
use crate::table::build_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMethod {
    Exhaustive,
    Numeric,
}

#[derive(Debug, Parser)]
#[command(name = "hopfcd", version, about = "Exact Cayley-Dickson algebra checks and zero-divisor search")]
pub struct Cli {
    /// Level n of the halves (elements alpha = (a, b) live at n + 1)
    #[arg(long, global = true, default_value_t = 4)]
    pub level: u32,
    /// Master seed
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Samples per suite, or runs for the numeric search
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: u64,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Terms per factor in the exhaustive search
    #[arg(long, global = true, default_value_t = 2)]
    pub support: usize,
    /// Write the JSON output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; output does not depend on this
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Record wall-clock time in reports (makes output run-dependent)
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run named verification suites
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
    },
    /// Search for zero-divisor pairs
    Search {
        #[arg(long, value_enum, default_value_t = SearchMethod::Exhaustive)]
        method: SearchMethod,
    },
    /// Retract an element of E_n minus P(n) onto the zero-divisor pairs
    Retract {
        /// JSON element at level n + 1
        input: PathBuf,
    },
    /// Basis multiplication table, or the octonion table of an alpha
    Table {
        /// JSON element alpha; when absent the basis table at --level
        #[arg(long)]
        alpha: Option<PathBuf>,
    },
    /// Apply a unit quaternion g = r + s eps~ + q eps + p e0~ to alpha
    Orbit {
        /// JSON element alpha
        alpha: PathBuf,
        /// r,s,q,p as rationals
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<Scalar>,
    },
    /// Re-check a certificate file from scratch
    VerifyCert { path: PathBuf },
}

/// Outcome of a command before it is printed.
struct Output {
    value: Value,
    code: i32,
}

#[derive(Debug)]
struct CliError {
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError { message: e.to_string() }
    }
}

impl CliError {
    fn new(message: impl Into<String>) -> Self {
        CliError { message: message.into() }
    }
}

/// Parses arguments, runs the command and writes the output; returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => match emit(&cli, &out.value) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("error: {}", e.message);
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {}", e.message);
            EXIT_USAGE
        }
    }
}

fn emit(cli: &Cli, value: &Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::new(e.to_string()))?;
    text.push('\n');
    match &cli.out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::new(format!("{}: {e}", p.display()))),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::new(format!("stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    if cli.samples == 0 {
        return Err(CliError::new("--samples must be at least 1"));
    }
    match &cli.command {
        Command::Verify { suites } => {
            require_exact(cli, "verify")?;
            verify(cli, suites)
        }
        Command::Search { method } => search(cli, *method),
        Command::Retract { input } => {
            require_exact(cli, "retract")?;
            let alpha: Element = read_json(input)?;
            let r = retract(&alpha)?;
            Ok(Output { value: json!({ "input": alpha, "retract": r }), code: EXIT_OK })
        }
        Command::Table { alpha } => {
            require_exact(cli, "table")?;
            match alpha {
                None => basis_table(cli.level),
                Some(p) => oct_table(&read_json(p)?),
            }
        }
        Command::Orbit { alpha, g } => {
            require_exact(cli, "orbit")?;
            if g.len() != 4 {
                return Err(CliError::new(format!("--g takes 4 values r,s,q,p, got {}", g.len())));
            }
            let alpha: Element = read_json(alpha)?;
            let g = SphereParam::new(g[0].clone(), g[1].clone(), g[2].clone(), g[3].clone())?;
            let image = s3_act(&alpha, &g)?;
            let same = orbit_equiv_o(&alpha, &image)?;
            Ok(Output {
                value: json!({ "alpha": alpha, "g": g, "image": image, "same_orbit": same }),
                code: if same { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::VerifyCert { path } => {
            require_exact(cli, "verify-cert")?;
            let rep = verify_cert_file(path)?;
            let code = if rep.passed { EXIT_OK } else { EXIT_FAILED };
            Ok(Output { value: to_value(&rep)?, code })
        }
    }
}

fn require_exact(cli: &Cli, command: &str) -> Result<(), CliError> {
    if cli.mode == Mode::Float {
        return Err(CliError::new(format!("{command} is exact-only; --mode float is not accepted")));
    }
    Ok(())
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::new(e.to_string()))
}

/// Byte offset of a 1-based line and column in `text`.
pub fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|m| CliError::new(format!("{}: {m}", path.display())))
}

/// Parses `text`, reporting failures with the byte offset of the error.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| {
        let offset = byte_offset(text, e.line(), e.column());
        format!("parse error at byte {offset} (line {}, column {}): {e}", e.line(), e.column())
    })
}

fn verify(cli: &Cli, names: &[String]) -> Result<Output, CliError> {
    let known = suite_names();
    if let Some(bad) = names.iter().find(|n| !known.contains(&n.as_str())) {
        return Err(CliError::new(format!("unknown suite {bad:?}; known suites: {}", known.join(", "))));
    }
    let cfg = SuiteConfig { level: cli.level, seed: cli.seed, samples: cli.samples };
    let run_one = |name: &str| -> Result<Report, Error> {
        let start = Instant::now();
        let mut rep = run_suite(name, &cfg)?;
        if cli.timings {
            rep.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok(rep)
    };
    let results: Vec<Result<Report, Error>> = if cli.jobs > 1 && names.len() > 1 {
        let chunk = names.len().div_ceil(cli.jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = names
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().map(|n| run_one(n)).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("suite worker panicked")).collect()
        })
    } else {
        names.iter().map(|n| run_one(n)).collect()
    };
    let reports: Vec<Report> = results.into_iter().collect::<Result<_, _>>()?;
    let passed = reports.iter().all(|r| r.passed);
    Ok(Output { value: json!({ "passed": passed, "reports": reports }), code: if passed { EXIT_OK } else { EXIT_FAILED } })
}

fn search(cli: &Cli, method: SearchMethod) -> Result<Output, CliError> {
    match method {
        SearchMethod::Exhaustive => {
            require_exact(cli, "exhaustive search")?;
            let certs = search_exhaustive_with(cli.level, cli.support, cli.jobs)?;
            let list: Vec<CertJson> = certs.iter().map(ZeroDivisorCert::to_json).collect();
            Ok(Output {
                value: json!({
                    "level": cli.level,
                    "method": "exhaustive",
                    "support": cli.support,
                    "count": list.len(),
                    "certificates": list,
                }),
                code: EXIT_OK,
            })
        }
        SearchMethod::Numeric => {
            if cli.level < 3 {
                return Err(Error::LevelTooLow { min: 3, got: cli.level }.into());
            }
            let runs = numeric_runs(cli)?;
            let best = runs.iter().map(|r| r.residual).fold(f64::INFINITY, f64::min);
            let certs: Vec<CertJson> = runs
                .iter()
                .filter(|r| r.converged)
                .filter_map(|r| round_to_cert(&r.a, &r.b, 64, Some(r.seed)))
                .map(|c| c.to_json())
                .collect();
            Ok(Output {
                value: json!({
                    "level": cli.level,
                    "method": "numeric",
                    "runs": runs.len(),
                    "converged": runs.iter().filter(|r| r.converged).count(),
                    "best_residual": best,
                    "results": runs,
                    "certificates": certs,
                }),
                code: EXIT_OK,
            })
        }
    }
}

fn numeric_runs(cli: &Cli) -> Result<Vec<crate::hopf_zero::NumericResult>, CliError> {
    let seeds: Vec<u64> = (0..cli.samples).map(|i| cli.seed.wrapping_add(i)).collect();
    let jobs = cli.jobs.max(1);
    let chunk = seeds.len().div_ceil(jobs).max(1);
    let level = cli.level;
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|&s| search_numeric(&NumericConfig::new(level, s))).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("search worker panicked")).collect()
    });
    Ok(results.into_iter().collect::<Result<Vec<_>, _>>()?)
}

fn signed_name(names: &[String], k: usize, sign: i8) -> String {
    format!("{}{}", if sign < 0 { "-" } else { "" }, names[k])
}

fn basis_table(level: u32) -> Result<Output, CliError> {
    let t = build_table(level)?;
    let names: Vec<String> = (0..t.dim()).map(|i| format!("e{i}")).collect();
    let rows: Vec<Vec<String>> = (0..t.dim())
        .map(|i| (0..t.dim()).map(|j| {
            let (k, s) = t.get(i, j);
            signed_name(&names, k, s)
        }).collect())
        .collect();
    Ok(Output { value: json!({ "level": level, "basis": names, "rows": rows }), code: EXIT_OK })
}

fn oct_table(alpha: &Element) -> Result<Output, CliError> {
    let names: Vec<String> = OCT_NAMES.iter().map(|s| s.to_string()).collect();
    let phi = oct_map(alpha)?;
    let cols = phi.columns();
    let rows: Vec<Vec<String>> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let p = &cols[i] * &cols[j];
                    (0..8)
                        .find_map(|k| {
                            if p == cols[k] {
                                Some(signed_name(&names, k, 1))
                            } else if p == -&cols[k] {
                                Some(signed_name(&names, k, -1))
                            } else {
                                None
                            }
                        })
                        .unwrap_or_else(|| "outside".to_string())
                })
                .collect()
        })
        .collect();
    let (report, code) = match oct_mono_from_alpha(alpha) {
        Ok((_, rep)) => {
            let code = if rep.passed { EXIT_OK } else { EXIT_FAILED };
            (Some(rep), code)
        }
        Err(e) => {
            let mut rep = Report::new("octonion-embedding", "octonion subalgebra spanned by alpha and H_epsilon");
            rep.note(format!("not an embedding: {e}"));
            (Some(rep), EXIT_OK)
        }
    };
    Ok(Output { value: json!({ "alpha": alpha, "basis": names, "rows": rows, "report": report }), code })
}

/// Re-checks a certificate file. Structural problems in the JSON are
/// usage errors; mathematical ones land in the report.
fn verify_cert_file(path: &Path) -> Result<Report, CliError> {
    let j: CertJson = read_json(path)?;
    Ok(verify_cert_json(&j)?)
}

pub fn verify_cert_json(j: &CertJson) -> Result<Report, Error> {
    let a = Element::new(j.level, j.a.clone())?;
    let b = Element::new(j.level, j.b.clone())?;
    let pair = FramePair::new(a, b)?;
    let mut rep = verify_pair(&pair);
    let actual = (&pair.a * &pair.b).norm_sq();
    let mut rec = Check::new("recorded-residual");
    rec.record(j.residual.is_zero() && actual == j.residual, || {
        Counterexample::new("recorded residual is not the exact zero product").with("recorded", &j.residual).with("actual", &actual)
    });
    rep.push(rec);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_offsets() {
        let text = "{\n  \"a\": 1,\n  oops\n}";
        assert_eq!(byte_offset(text, 1, 1), 0);
        assert_eq!(byte_offset(text, 3, 3), 14);
        let err = parse_json::<Value>(text).unwrap_err();
        assert!(err.contains("byte 14"), "{err}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["hopfcd", "verify", "no-such-suite"]), EXIT_USAGE);
        assert_eq!(run(["hopfcd", "verify", "--mode", "float", "lemma-1.1"]), EXIT_USAGE);
        assert_eq!(run(["hopfcd", "--level", "3", "verify", "thm-3.4"]), EXIT_USAGE);
        assert_eq!(run(["hopfcd", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn tampered_cert_fails_verification() {
        let j: CertJson = parse_json(
            r#"{"level":4,"a":["0","1","0","0","0","0","0","0","0","0","1","0","0","0","0","0"],
                "b":["0","0","0","0","1","0","0","0","0","0","0","0","0","0","0","-1"],
                "residual":"0","seed":null,"method":"exhaustive"}"#,
        )
        .unwrap();
        assert!(verify_cert_json(&j).unwrap().passed);
        let mut bad = j.clone();
        bad.b[15] = Scalar::one();
        let rep = verify_cert_json(&bad).unwrap();
        assert!(!rep.passed);
        assert!(rep.failures().contains(&"complexified-products-vanish"));
    }
}
