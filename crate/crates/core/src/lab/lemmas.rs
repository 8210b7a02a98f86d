//! Exhaustive checks of the two product identities in `Δ(R_{2k})`:
//! `e_i * e_k = 0`, and `e_i * e_j = e_i * e_{k+j}` for `1 <= j < k`.
//! Products are expanded with the generic ring multiplication.

use serde::{Deserialize, Serialize};

use super::LabError;
use crate::quandle::Quandle;
use crate::ring::ebasis_product;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum LemmaViolation {
    /// `e_i * e_k != 0` in `R_n`.
    ZeroColumn { n: usize, i: usize, product: String },
    /// `e_i * e_j != e_i * e_{k+j}` in `R_n`.
    Shift { n: usize, i: usize, j: usize, left: String, right: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub n_max: usize,
    /// Orders checked, `4, 6, ..., n_max`.
    pub orders: Vec<usize>,
    pub zero_column_checks: usize,
    pub shift_checks: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_lemmas(n_max: usize) -> Result<LemmaReport, LabError> {
    if n_max < 4 || !n_max.is_multiple_of(2) {
        return Err(LabError::InvalidRange(format!("lemma range needs an even n_max >= 4, got {n_max}")));
    }
    let mut report = LemmaReport {
        n_max,
        orders: (4..=n_max).step_by(2).collect(),
        zero_column_checks: 0,
        shift_checks: 0,
        violations: Vec::new(),
    };
    for n in (4..=n_max).step_by(2) {
        let half = n / 2;
        let q = Quandle::dihedral(n)?;
        for i in 1..n {
            let p = ebasis_product::<i64>(&q, i, half)?;
            report.zero_column_checks += 1;
            if !p.is_zero() {
                report.violations.push(LemmaViolation::ZeroColumn { n, i, product: p.to_string() });
            }
            for j in 1..half {
                let left = ebasis_product::<i64>(&q, i, j)?;
                let right = ebasis_product::<i64>(&q, i, half + j)?;
                report.shift_checks += 1;
                if left != right {
                    report.violations.push(LemmaViolation::Shift {
                        n,
                        i,
                        j,
                        left: left.to_string(),
                        right: right.to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}
