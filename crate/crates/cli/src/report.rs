//! The versioned JSON report emitted by every command.

use std::fmt;
use std::str::FromStr;

use quandle_augment::lab::fixtures::Erratum;
use quandle_augment::lab::{LemmaReport, ScanRecord, TheoremReport, VerdictSummary};
use quandle_augment::{Int, Lattice, Mode, QuotientReport, Violation};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: CommandEcho,
    pub results: Results,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<Erratum>,
    /// Wall-clock cost of the run. Kept apart from `results` so that two
    /// runs on the same input differ only here.
    pub timing: Timing,
}

impl ReportDocument {
    /// The timing-free part of the report, as compact JSON.
    pub fn payload(&self) -> String {
        serde_json::to_string(&self.results).expect("report values serialize")
    }
}

/// Every parameter the command ran with, defaults included.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quandle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Basis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_range: Option<InclusiveRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_range: Option<InclusiveRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<u64>,
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Results {
    Table(TableResult),
    Quotient(Box<QuotientResult>),
    VerifyPaper(Box<VerifyResult>),
    Scan(ScanResult),
    Validate(ValidateResult),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Quandle elements `a_0..a_(n-1)`.
    #[default]
    A,
    /// Augmentation generators `e_1..e_(n-1)`.
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// `a..b`, both ends included. A bare `a` means `a..a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct InclusiveRange {
    pub from: usize,
    pub to: usize,
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bound = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid range {s:?}: expected <a>..<b> with integers a <= b"))
        };
        let (from, to) = match s.split_once("..") {
            Some((a, b)) => (bound(a)?, bound(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = bound(s)?;
                (v, v)
            }
        };
        if from > to {
            return Err(format!("invalid range {s:?}: start exceeds end"));
        }
        Ok(InclusiveRange { from, to })
    }
}

impl fmt::Display for InclusiveRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.from, self.to)
    }
}

impl TryFrom<String> for InclusiveRange {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<InclusiveRange> for String {
    fn from(r: InclusiveRange) -> String {
        r.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableResult {
    pub quandle: String,
    pub order: usize,
    pub basis: Basis,
    pub row_labels: Vec<String>,
    pub column_labels: Vec<String>,
    /// `entries[i][j]` is the product of row `i` by column `j`.
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientResult {
    pub quandle: String,
    pub order: usize,
    pub k: usize,
    pub mode: Mode,
    /// `Δ^k`, canonical basis.
    pub upper: Lattice<Int>,
    /// `Δ^(k+1)`, canonical basis.
    pub lower: Lattice<Int>,
    pub quotient: QuotientReport<Int>,
    pub structure: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResult {
    pub lemmas: LemmaReport,
    pub theorem: TheoremReport,
    pub passed: bool,
    pub structure: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub rows: Vec<ScanRecord>,
    pub summary: VerdictSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateResult {
    pub quandle: String,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("3..12".parse(), Ok(InclusiveRange { from: 3, to: 12 }));
        assert_eq!("3..=12".parse(), Ok(InclusiveRange { from: 3, to: 12 }));
        assert_eq!("5".parse(), Ok(InclusiveRange { from: 5, to: 5 }));
        assert!("9..3".parse::<InclusiveRange>().is_err());
        assert!("a..3".parse::<InclusiveRange>().is_err());
        assert!("3..".parse::<InclusiveRange>().is_err());
        let js = serde_json::to_string(&InclusiveRange { from: 1, to: 4 }).unwrap();
        assert_eq!(js, "\"1..4\"");
    }
}
