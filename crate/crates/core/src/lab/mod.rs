//! Executable versions of the published lemmas, the `R_8` counterexample
//! and the conjecture clauses, plus the `(n, k)` scanner.

pub mod fixtures;
pub mod lemmas;
pub mod scan;
pub mod theorem;

use thiserror::Error;

use crate::error::LatticeError;
use crate::quandle::QuandleError;
use crate::ring::RingError;

pub use lemmas::{check_lemmas, LemmaReport, LemmaViolation};
pub use scan::{
    classify, compare_modes, conjecture_clause, scan, Clause, ModeDiscrepancy, ScanConfig, ScanRecord, ScanRow,
    Verdict, VerdictSummary,
};
pub use theorem::{verify_theorem_r8, StepResult, TheoremReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl From<LatticeError> for LabError {
    fn from(e: LatticeError) -> Self {
        LabError::Ring(RingError::Lattice(e))
    }
}
