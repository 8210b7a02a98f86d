//! Sweeps over `(n, k)` computing `Δ^k(R_n)/Δ^(k+1)(R_n)` and classifying
//! each cell against the two conjecture clauses:
//!
//! * odd `n > 1`, `k >= 1`: the quotient is cyclic of order `n`;
//! * even `n > 2`, `k >= 2`: the quotient has order `n`.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::LabError;
use crate::lattice::{GroupOrder, QuotientReport};
use crate::quandle::Quandle;
use crate::ring::{DeltaTower, Mode};
use crate::scalar::Scalar;
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    OddClause,
    EvenClause,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Counterexample,
    NotApplicable,
    /// The cell exceeded the configured work ceiling and was not computed.
    ResourceLimit,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::OddClause => "odd_clause",
            Clause::EvenClause => "even_clause",
            Clause::NotApplicable => "not_applicable",
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Counterexample => "counterexample",
            Verdict::NotApplicable => "not_applicable",
            Verdict::ResourceLimit => "resource_limit",
        })
    }
}

/// Which clause, if any, makes a claim about `(n, k)`.
pub fn conjecture_clause(n: usize, k: usize) -> Clause {
    if n % 2 == 1 && n > 1 && k >= 1 {
        Clause::OddClause
    } else if n.is_multiple_of(2) && n > 2 && k >= 2 {
        Clause::EvenClause
    } else {
        Clause::NotApplicable
    }
}

/// Verdict for a computed quotient of `Δ^k(R_n)/Δ^(k+1)(R_n)`.
pub fn classify<T: Scalar>(n: usize, k: usize, quotient: &QuotientReport<T>) -> (Clause, Verdict) {
    let clause = conjecture_clause(n, k);
    let n_t = T::from_usize(n).expect("order fits the scalar type");
    let verdict = match clause {
        Clause::NotApplicable => Verdict::NotApplicable,
        Clause::OddClause if quotient.is_cyclic_of_order(&n_t) => Verdict::Consistent,
        Clause::EvenClause if quotient.order == GroupOrder::Finite(n_t) => Verdict::Consistent,
        _ => Verdict::Counterexample,
    };
    (clause, verdict)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub n_from: usize,
    pub n_to: usize,
    pub k_from: usize,
    pub k_to: usize,
    pub mode: Mode,
    /// Worker threads; cells for one `n` always run on one worker.
    pub jobs: usize,
    /// Ceiling on `n * k`; larger cells are flagged instead of computed.
    pub work_limit: Option<u64>,
}

impl ScanConfig {
    pub fn new(n: (usize, usize), k: (usize, usize), mode: Mode) -> Self {
        ScanConfig { n_from: n.0, n_to: n.1, k_from: k.0, k_to: k.1, mode, jobs: 1, work_limit: None }
    }

    pub fn validate(&self) -> Result<(), LabError> {
        if self.n_from < 3 || self.n_from > self.n_to {
            return Err(LabError::InvalidRange(format!(
                "n range {}..{} must satisfy 3 <= from <= to",
                self.n_from, self.n_to
            )));
        }
        if self.k_from < 1 || self.k_from > self.k_to {
            return Err(LabError::InvalidRange(format!(
                "k range {}..{} must satisfy 1 <= from <= to",
                self.k_from, self.k_to
            )));
        }
        if self.jobs == 0 {
            return Err(LabError::InvalidRange("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn within_limit(&self, n: usize, k: usize) -> bool {
        self.work_limit.is_none_or(|lim| (n as u64).saturating_mul(k as u64) <= lim)
    }
}

/// One scanned cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    /// `None` when the cell hit the work ceiling.
    pub quotient: Option<QuotientReport<Int>>,
    pub clause: Clause,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

/// The timing-free, flat form of a [`ScanRow`]; identical across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub free_rank: Option<usize>,
    /// Invariant factors joined with `;` (empty for the trivial group).
    pub torsion: Option<String>,
    pub order: Option<String>,
    pub clause: Clause,
    pub verdict: Verdict,
}

impl ScanRow {
    pub fn record(&self) -> ScanRecord {
        let q = self.quotient.as_ref();
        ScanRecord {
            n: self.n,
            k: self.k,
            mode: self.mode,
            free_rank: q.map(|q| q.free_rank),
            torsion: q.map(|q| q.torsion.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")),
            order: q.map(|q| q.order.to_string()),
            clause: self.clause,
            verdict: self.verdict,
        }
    }
}

fn scan_order(n: usize, cfg: &ScanConfig) -> Result<Vec<ScanRow>, LabError> {
    let q = Quandle::dihedral(n)?;
    let mut tower = DeltaTower::<Int>::new(&q, cfg.mode)?;
    let mut rows = Vec::with_capacity(cfg.k_to - cfg.k_from + 1);
    for k in cfg.k_from..=cfg.k_to {
        let start = Instant::now();
        if !cfg.within_limit(n, k) {
            rows.push(ScanRow {
                n,
                k,
                mode: cfg.mode,
                quotient: None,
                clause: conjecture_clause(n, k),
                verdict: Verdict::ResourceLimit,
                elapsed: start.elapsed(),
            });
            continue;
        }
        let quotient = tower.quotient(k)?;
        let (clause, verdict) = classify(n, k, &quotient);
        rows.push(ScanRow {
            n,
            k,
            mode: cfg.mode,
            quotient: Some(quotient),
            clause,
            verdict,
            elapsed: start.elapsed(),
        });
    }
    Ok(rows)
}

/// One row per `(n, k)`, ordered by `n` then `k`, whatever `jobs` is.
pub fn scan(cfg: &ScanConfig) -> Result<Vec<ScanRow>, LabError> {
    cfg.validate()?;
    let orders: Vec<usize> = (cfg.n_from..=cfg.n_to).collect();
    let per_order: Vec<Result<Vec<ScanRow>, LabError>> = if cfg.jobs == 1 {
        orders.iter().map(|&n| scan_order(n, cfg)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| LabError::InvalidRange(format!("cannot start worker pool: {e}")))?;
        pool.install(|| orders.par_iter().map(|&n| scan_order(n, cfg)).collect())
    };
    let mut rows = Vec::new();
    for r in per_order {
        rows.extend(r?);
    }
    Ok(rows)
}

/// Counts of each verdict in a scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub consistent: usize,
    pub counterexample: usize,
    pub not_applicable: usize,
    pub resource_limit: usize,
}

impl VerdictSummary {
    pub fn of(rows: &[ScanRow]) -> Self {
        let mut s = VerdictSummary::default();
        for r in rows {
            match r.verdict {
                Verdict::Consistent => s.consistent += 1,
                Verdict::Counterexample => s.counterexample += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
                Verdict::ResourceLimit => s.resource_limit += 1,
            }
        }
        s
    }
}

/// A cell where right and two-sided generation disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ModeDiscrepancy {
    pub n: usize,
    pub k: usize,
    pub right: QuotientReport<Int>,
    pub two_sided: QuotientReport<Int>,
}

/// Compares the two generation modes over dihedral `R_n`, `n` in
/// `n_from..=n_to`, `k` in `1..=k_to`, and returns every disagreement.
pub fn compare_modes(n_from: usize, n_to: usize, k_to: usize) -> Result<Vec<ModeDiscrepancy>, LabError> {
    let mut out = Vec::new();
    for n in n_from.max(1)..=n_to {
        let q = Quandle::dihedral(n)?;
        let mut right = DeltaTower::<Int>::new(&q, Mode::Right)?;
        let mut two = DeltaTower::<Int>::new(&q, Mode::TwoSided)?;
        for k in 1..=k_to {
            let (a, b) = (right.quotient(k)?, two.quotient(k)?);
            if a != b {
                out.push(ModeDiscrepancy { n, k, right: a, two_sided: b });
            }
        }
    }
    Ok(out)
}
