//! Command-line front end for the `quandle-augment` library.
//!
//! [`execute`] turns parsed arguments into a [`ReportDocument`] plus an
//! [`ExitStatus`]; [`render`] formats the document. `main` only glues the
//! two together, so everything here is testable without spawning a process.

pub mod render;
pub mod report;

use std::time::Instant;

use clap::{Parser, Subcommand};
use quandle_augment::lab::{self, check_lemmas, verify_theorem_r8, LabError, ScanConfig, ScanRow, Verdict};
use quandle_augment::ring::format_terms;
use quandle_augment::ring::EProductTable;
use quandle_augment::{DeltaTower, Int, Mode, Quandle, QuandleError, QuandleSelector, RingError};
use thiserror::Error;

pub use render::render;
pub use report::{
    Basis, CommandEcho, Format, InclusiveRange, QuotientResult, ReportDocument, Results, ScanResult, TableResult,
    Timing, ValidateResult, VerifyResult, SCHEMA_VERSION,
};

/// Largest even order covered by the lemma section of `verify-paper`.
pub const LEMMA_MAX: usize = 24;

#[derive(Debug, Parser)]
#[command(name = "quandle-augment", version, about = "Augmentation ideal quotients of finite quandle rings over Z")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ModeArg {
    #[default]
    Right,
    TwoSided,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Right => Mode::Right,
            ModeArg::TwoSided => Mode::TwoSided,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Cayley table (basis a) or the e_i * e_j product table (basis e).
    Table {
        /// dihedral:<n>, trivial:<n> or file:<path>
        quandle: QuandleSelector,
        #[arg(long, value_enum, default_value_t = Basis::A)]
        basis: Basis,
    },
    /// Compute Δ^k / Δ^(k+1) with both canonical bases.
    Quotient {
        quandle: QuandleSelector,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Right)]
        mode: ModeArg,
        /// Refuse to compute when n * k exceeds this ceiling.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Replay the R_8 counterexample and the even-order lemma suite.
    VerifyPaper,
    /// Classify Δ^k(R_n)/Δ^(k+1)(R_n) against the conjecture over ranges of n and k.
    Scan {
        /// Orders of dihedral quandles, e.g. 3..12 (inclusive).
        #[arg(long)]
        n: InclusiveRange,
        /// Powers, e.g. 1..4 (inclusive).
        #[arg(long)]
        k: InclusiveRange,
        #[arg(long, value_enum, default_value_t = ModeArg::Right)]
        mode: ModeArg,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Cells with n * k above this ceiling are flagged, not computed.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Check that a quandle table satisfies the axioms.
    Validate { quandle: QuandleSelector },
}

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailure = 1,
    Usage = 2,
    ResourceLimit = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("cannot write {format:?} output: {message}")]
    Output { format: Format, message: String },
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) | CliError::Quandle(_) | CliError::Output { .. } => ExitStatus::Usage,
            CliError::Lab(LabError::InvalidRange(_) | LabError::Quandle(_)) => ExitStatus::Usage,
            CliError::Ring(RingError::InvalidK) => ExitStatus::Usage,
            CliError::Ring(_) | CliError::Lab(_) => ExitStatus::VerificationFailure,
            CliError::ResourceLimit(_) => ExitStatus::ResourceLimit,
        }
    }
}

/// A finished command: the report and the status the process should exit with.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: ReportDocument,
    pub status: ExitStatus,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut echo = CommandEcho { format: cli.format, ..CommandEcho::default() };
    let mut errata = Vec::new();
    let (results, status) = match &cli.command {
        Command::Table { quandle, basis } => {
            echo.name = "table".into();
            echo.quandle = Some(quandle.to_string());
            echo.basis = Some(*basis);
            (Results::Table(table(quandle, *basis)?), ExitStatus::Success)
        }
        Command::Quotient { quandle, k, mode, limit } => {
            let k = usize::try_from(*k).map_err(|_| CliError::Usage(format!("k = {k} is too large")))?;
            echo.name = "quotient".into();
            echo.quandle = Some(quandle.to_string());
            echo.k = Some(k);
            echo.mode = Some((*mode).into());
            echo.limit = *limit;
            (Results::Quotient(Box::new(quotient(quandle, k, (*mode).into(), *limit)?)), ExitStatus::Success)
        }
        Command::VerifyPaper => {
            echo.name = "verify-paper".into();
            let v = verify()?;
            errata = v.theorem.errata.clone();
            let status = if v.passed { ExitStatus::Success } else { ExitStatus::VerificationFailure };
            (Results::VerifyPaper(Box::new(v)), status)
        }
        Command::Scan { n, k, mode, jobs, limit } => {
            echo.name = "scan".into();
            echo.n_range = Some(*n);
            echo.k_range = Some(*k);
            echo.mode = Some((*mode).into());
            let jobs = usize::try_from(*jobs).map_err(|_| CliError::Usage(format!("--jobs {jobs} is too large")))?;
            echo.jobs = Some(jobs);
            echo.limit = *limit;
            let cfg = ScanConfig {
                jobs,
                work_limit: *limit,
                ..ScanConfig::new((n.from, n.to), (k.from, k.to), (*mode).into())
            };
            let result = scan(&cfg)?;
            let all_limited = result.rows.iter().all(|r| r.verdict == Verdict::ResourceLimit);
            let status = if all_limited { ExitStatus::ResourceLimit } else { ExitStatus::Success };
            (Results::Scan(result), status)
        }
        Command::Validate { quandle } => {
            echo.name = "validate".into();
            echo.quandle = Some(quandle.to_string());
            let v = validate(quandle)?;
            let status = if v.valid { ExitStatus::Success } else { ExitStatus::VerificationFailure };
            (Results::Validate(v), status)
        }
    };
    let elapsed_us = u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX);
    let document = ReportDocument {
        schema_version: SCHEMA_VERSION,
        command: echo,
        results,
        errata,
        timing: Timing { elapsed_us },
    };
    Ok(Outcome { document, status })
}

fn display_name(q: &Quandle, sel: &QuandleSelector) -> String {
    q.name().map_or_else(|| sel.to_string(), str::to_string)
}

pub fn table(sel: &QuandleSelector, basis: Basis) -> Result<TableResult, CliError> {
    let q = sel.build()?;
    let n = q.order();
    let (labels, entries) = match basis {
        Basis::A => {
            let labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let entries = q.table().into_iter().map(|row| row.into_iter().map(|v| format!("a{v}")).collect()).collect();
            (labels, entries)
        }
        Basis::E => {
            let products = EProductTable::<Int>::new(&q)?;
            let labels: Vec<String> = (1..n).map(|i| format!("e{i}")).collect();
            let entries = (1..n).map(|i| (1..n).map(|j| format_terms("e", 1, products.get(i, j))).collect()).collect();
            (labels, entries)
        }
    };
    Ok(TableResult {
        quandle: display_name(&q, sel),
        order: n,
        basis,
        row_labels: labels.clone(),
        column_labels: labels,
        entries,
    })
}

pub fn quotient(sel: &QuandleSelector, k: usize, mode: Mode, limit: Option<u64>) -> Result<QuotientResult, CliError> {
    let q = sel.build()?;
    if let Some(lim) = limit {
        let work = (q.order() as u64).saturating_mul(k as u64);
        if work > lim {
            return Err(CliError::ResourceLimit(format!("n * k = {work} exceeds --limit {lim}")));
        }
    }
    let mut tower = DeltaTower::<Int>::new(&q, mode)?;
    let upper = tower.power(k)?.clone();
    let lower = tower.power(k + 1)?.clone();
    let quotient = tower.quotient(k)?;
    Ok(QuotientResult {
        quandle: display_name(&q, sel),
        order: q.order(),
        k,
        mode,
        upper,
        lower,
        structure: quotient.to_string(),
        quotient,
    })
}

pub fn verify() -> Result<VerifyResult, CliError> {
    let lemmas = check_lemmas(LEMMA_MAX)?;
    let theorem = verify_theorem_r8()?;
    Ok(VerifyResult {
        passed: lemmas.passed() && theorem.passed(),
        structure: theorem.quotient.to_string(),
        lemmas,
        theorem,
    })
}

pub fn scan(cfg: &ScanConfig) -> Result<ScanResult, CliError> {
    let rows = lab::scan(cfg)?;
    Ok(ScanResult { summary: lab::VerdictSummary::of(&rows), rows: rows.iter().map(ScanRow::record).collect() })
}

/// Parse and I/O problems are errors; axiom violations are reported.
pub fn validate(sel: &QuandleSelector) -> Result<ValidateResult, CliError> {
    let mut out = ValidateResult {
        quandle: sel.to_string(),
        valid: false,
        name: None,
        order: None,
        violations: Vec::new(),
        message: None,
    };
    match sel.build() {
        Ok(q) => {
            out.valid = true;
            out.name = q.name().map(str::to_string);
            out.order = Some(q.order());
        }
        Err(QuandleError::Invalid(v)) => {
            out.message = Some(QuandleError::Invalid(v.clone()).to_string());
            out.violations = v;
        }
        Err(e @ (QuandleError::OrderMismatch { .. } | QuandleError::EmptyQuandle)) => {
            out.message = Some(e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}
