// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end for factoring runs, single order-finding runs,
//! read-out distributions and QFT verification.
//!
//! Every subcommand checks its flags before building any state, and the
//! same command line always produces the same bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use qshor::shor::rng::substream;
use qshor::shor::{factor_with, order_classical, CollapsedRegister, FactorOptions, MAX_ANALYTIC_REGISTER};
use qshor::{circuit_to_matrix, dft_matrix, gcd, qft_circuit, OrderFinder, OrderFindingConfig, OrderResult};

/// Largest width compared against the dense DFT matrix.
pub const MAX_VERIFY_MATRIX_QUBITS: usize = 6;
/// Largest width accepted by `qft-verify`.
pub const MAX_VERIFY_QUBITS: usize = 64;
/// Matrix deviation above which `qft-verify` fails.
pub const VERIFY_TOLERANCE: f64 = 1e-10;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILURE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    Factor,
    Order,
    Probdist,
    QftVerify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Parsed command line.
#[derive(Debug, Clone, Parser)]
#[command(name = "qshor", version, about = "Shor's algorithm on a dense state-vector simulator")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub subcommand: Subcommand,
    /// Number to factor (factor, order, probdist) or largest QFT width (qft-verify)
    #[arg(long = "n")]
    pub n: Option<u64>,
    /// Base; forces the same base on every factoring attempt
    #[arg(long)]
    pub x: Option<u64>,
    /// First-register width
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Factoring attempts before giving up [default: 32]
    #[arg(long)]
    pub max_attempts: Option<usize>,
    /// Number of order-finding runs [default: 1]
    #[arg(long)]
    pub runs: Option<usize>,
    /// Second-register value to condition on (probdist) [default: x]
    #[arg(long)]
    pub outcome: Option<u64>,
    /// Write the result here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the lowered (inverse) QFT circuit in text form to this file
    #[arg(long)]
    pub dump: Option<PathBuf>,
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub output: String,
    pub exit_code: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<qshor::Error> for CliError {
    fn from(e: qshor::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl CliConfig {
    fn reject(&self, flags: &[(&str, bool)]) -> Result<(), CliError> {
        let name = self.subcommand.to_possible_value().expect("no skipped variants");
        for (flag, present) in flags {
            if *present {
                return Err(usage(format!("--{flag} is not accepted by {}", name.get_name())));
            }
        }
        Ok(())
    }

    fn require_n(&self) -> Result<u64, CliError> {
        self.n.ok_or_else(|| usage("--n is required"))
    }

    fn require_x(&self) -> Result<u64, CliError> {
        self.x.ok_or_else(|| usage("--x is required"))
    }

    /// Rejects missing or meaningless flags for the chosen subcommand.
    pub fn validate(&self) -> Result<(), CliError> {
        let n = self.require_n()?;
        match self.subcommand {
            Subcommand::Factor => {
                self.reject(&[
                    ("runs", self.runs.is_some()),
                    ("outcome", self.outcome.is_some()),
                    ("dump", self.dump.is_some()),
                    ("format csv", self.format == Some(Format::Csv)),
                ])?;
                if n < 4 {
                    return Err(usage(format!("N must be at least 4, got {n}")));
                }
                if qshor::shor::is_prime(n) {
                    return Err(usage(format!("N must be composite, {n} is prime")));
                }
                if let Some(x) = self.x {
                    if x <= 1 || x >= n {
                        return Err(usage(format!("--x must satisfy 1 < x < {n}")));
                    }
                }
                if let Some(t) = self.t {
                    self.pipeline_config(n, self.x.unwrap_or(coprime_witness(n)), Some(t))?;
                }
            }
            Subcommand::Order => {
                self.reject(&[
                    ("max-attempts", self.max_attempts.is_some()),
                    ("outcome", self.outcome.is_some()),
                    ("format csv", self.format == Some(Format::Csv)),
                ])?;
                if self.runs == Some(0) {
                    return Err(usage("--runs must be at least 1"));
                }
                self.pipeline_config(n, self.require_x()?, self.t)?;
            }
            Subcommand::Probdist => {
                self.reject(&[
                    ("max-attempts", self.max_attempts.is_some()),
                    ("runs", self.runs.is_some()),
                    ("dump", self.dump.is_some()),
                ])?;
                let x = self.require_x()?;
                let t = self.t.unwrap_or_else(|| qshor::shor::default_first_register(n));
                if t > MAX_ANALYTIC_REGISTER.min(20) {
                    return Err(usage(format!("--t must be at most 20 for probdist, got {t}")));
                }
                CollapsedRegister::new(x, n, t, self.outcome.unwrap_or(x))?;
            }
            Subcommand::QftVerify => {
                self.reject(&[
                    ("x", self.x.is_some()),
                    ("t", self.t.is_some()),
                    ("max-attempts", self.max_attempts.is_some()),
                    ("runs", self.runs.is_some()),
                    ("outcome", self.outcome.is_some()),
                ])?;
                if n == 0 || n > MAX_VERIFY_QUBITS as u64 {
                    return Err(usage(format!("--n must be in 1..={MAX_VERIFY_QUBITS} for qft-verify")));
                }
            }
        }
        Ok(())
    }

    fn pipeline_config(&self, n: u64, x: u64, t: Option<usize>) -> Result<OrderFindingConfig, CliError> {
        if n < 3 {
            return Err(usage(format!("N must be at least 3, got {n}")));
        }
        if x > 1 && x < n {
            let g = gcd(x, n)?;
            if g != 1 {
                return Err(usage(format!(
                    "gcd({x}, {n}) = {g}: x is not coprime to N; found factor {g} ({n} = {g} x {})",
                    n / g
                )));
            }
        }
        let cfg = OrderFindingConfig::new(n, x)?.with_seed(self.seed);
        Ok(match t {
            Some(t) => cfg.with_first_register(t)?,
            None => cfg,
        })
    }
}

/// Some base coprime to `n`, used only to validate a register override.
fn coprime_witness(n: u64) -> u64 {
    (2..n).find(|&x| gcd(x, n) == Ok(1)).unwrap_or(2)
}

/// Validates and runs one command line.
pub fn run(cfg: &CliConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let report = match cfg.subcommand {
        Subcommand::Factor => run_factor(cfg)?,
        Subcommand::Order => run_order(cfg)?,
        Subcommand::Probdist => run_probdist(cfg)?,
        Subcommand::QftVerify => run_qft_verify(cfg)?,
    };
    Ok(report)
}

fn to_json<S: Serialize>(value: &S) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn run_factor(cfg: &CliConfig) -> Result<Report, CliError> {
    let opts = FactorOptions {
        max_attempts: cfg.max_attempts.unwrap_or(32),
        forced_x: cfg.x,
        t: cfg.t,
    };
    let record = factor_with::<f64>(cfg.require_n()?, cfg.seed, &opts)?;
    let exit_code = if record.success { EXIT_OK } else { EXIT_FAILURE };
    Ok(Report { output: to_json(&record), exit_code })
}

#[derive(Debug, Serialize)]
struct OrderReport {
    config: OrderFindingConfig,
    order_bruteforce: u64,
    results: Vec<OrderResult>,
}

pub fn run_order(cfg: &CliConfig) -> Result<Report, CliError> {
    let config = cfg.pipeline_config(cfg.require_n()?, cfg.require_x()?, cfg.t)?;
    let finder = OrderFinder::<f64>::new(config)?;
    if let Some(path) = &cfg.dump {
        write_file(path, &finder.inverse_qft().to_text())?;
    }
    let results = (0..cfg.runs.unwrap_or(1))
        .map(|i| finder.run(&mut substream(config.seed, i as u64)))
        .collect::<Result<Vec<_>, _>>()?;
    let report = OrderReport { config, order_bruteforce: order_classical(config.x, config.n_value)?, results };
    Ok(Report { output: to_json(&report), exit_code: EXIT_OK })
}

#[derive(Debug, Serialize)]
struct ProbRow {
    j: u64,
    prob: f64,
}

pub fn run_probdist(cfg: &CliConfig) -> Result<Report, CliError> {
    let (n, x) = (cfg.require_n()?, cfg.require_x()?);
    let t = cfg.t.unwrap_or_else(|| qshor::shor::default_first_register(n));
    let register = CollapsedRegister::new(x, n, t, cfg.outcome.unwrap_or(x))?;
    let probs = register.distribution::<f64>();
    let output = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = String::from("j,prob\n");
            for (j, p) in probs.iter().enumerate() {
                writeln!(s, "{j},{p}").expect("string write");
            }
            s
        }
        Format::Json => {
            let rows: Vec<ProbRow> = probs.iter().enumerate().map(|(j, &prob)| ProbRow { j: j as u64, prob }).collect();
            to_json(&rows)
        }
    };
    Ok(Report { output, exit_code: EXIT_OK })
}

/// One row of the QFT verification table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    /// Largest entrywise deviation from the DFT matrix; absent past
    /// [`MAX_VERIFY_MATRIX_QUBITS`].
    pub max_deviation: Option<f64>,
    pub gate_count: usize,
    pub ratio: f64,
}

pub fn verify_rows(max_n: usize) -> Result<Vec<VerifyRow>, CliError> {
    (1..=max_n)
        .map(|n| {
            let plan = qft_circuit(n, false)?;
            let max_deviation = if n <= MAX_VERIFY_MATRIX_QUBITS {
                let m = circuit_to_matrix::<f64>(&plan.lowered_circuit())?;
                Some(m.max_abs_diff(&dft_matrix(n)?)?)
            } else {
                None
            };
            let gate_count = plan.elementary_gate_count;
            Ok(VerifyRow { n, max_deviation, gate_count, ratio: gate_count as f64 / (n * n) as f64 })
        })
        .collect()
}

pub fn run_qft_verify(cfg: &CliConfig) -> Result<Report, CliError> {
    let max_n = cfg.require_n()? as usize;
    if let Some(path) = &cfg.dump {
        write_file(path, &qft_circuit(max_n, false)?.lowered_circuit().to_text())?;
    }
    let rows = verify_rows(max_n)?;
    let failed = rows.iter().any(|r| r.max_deviation.is_some_and(|d| d.is_nan() || d > VERIFY_TOLERANCE));
    let output = match cfg.format {
        Some(Format::Json) => to_json(&rows),
        Some(Format::Csv) => {
            let mut s = String::from("n,max_deviation,gate_count,ratio\n");
            for r in &rows {
                let dev = r.max_deviation.map_or(String::new(), |d| format!("{d:e}"));
                writeln!(s, "{},{},{},{}", r.n, dev, r.gate_count, r.ratio).expect("string write");
            }
            s
        }
        None => {
            let mut s = format!("{:>3}  {:>13}  {:>10}  {:>9}\n", "n", "max_deviation", "gate_count", "count/n^2");
            for r in &rows {
                let dev = r.max_deviation.map_or("-".to_string(), |d| format!("{d:.3e}"));
                writeln!(s, "{:>3}  {:>13}  {:>10}  {:>9.4}", r.n, dev, r.gate_count, r.ratio).expect("string write");
            }
            s
        }
    };
    Ok(Report { output, exit_code: if failed { EXIT_FAILURE } else { EXIT_OK } })
}

/// Sends `report` to `--out` or stdout.
pub fn emit(cfg: &CliConfig, report: &Report) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => write_file(path, &report.output),
        None => {
            print!("{}", report.output);
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> CliConfig {
        CliConfig::try_parse_from(std::iter::once("qshor").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults() {
        let cfg = parse(&["factor", "--n", "21"]);
        assert_eq!(cfg.seed, 0);
        assert_eq!(cfg.max_attempts, None);
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn rejects_meaningless_flags() {
        for args in [
            &["factor", "--n", "21", "--outcome", "2"][..],
            &["order", "--n", "21", "--x", "2", "--max-attempts", "3"],
            &["probdist", "--n", "21", "--x", "2", "--runs", "3"],
            &["qft-verify", "--n", "3", "--x", "2"],
            &["factor", "--n", "21", "--format", "csv"],
        ] {
            assert!(matches!(parse(args).validate(), Err(CliError::Usage(_))), "{args:?}");
        }
    }

    #[test]
    fn register_guard_is_checked_up_front() {
        let err = parse(&["order", "--n", "21", "--x", "2", "--t", "30"]).validate().unwrap_err();
        assert!(err.to_string().contains("exceeds the limit"), "{err}");
        assert!(parse(&["factor", "--n", "21", "--t", "30"]).validate().is_err());
        assert!(parse(&["probdist", "--n", "21", "--x", "2", "--t", "21"]).validate().is_err());
    }

    #[test]
    fn qft_rows() {
        let rows = verify_rows(3).unwrap();
        assert_eq!(rows.iter().map(|r| r.gate_count).collect::<Vec<_>>(), [1, 10, 21]);
        assert!(rows.iter().all(|r| r.max_deviation.unwrap() < VERIFY_TOLERANCE));
    }
}
