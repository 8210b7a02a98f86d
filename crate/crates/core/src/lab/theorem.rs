//! Replay of the `|Δ^2(R_8)/Δ^3(R_8)| = 16` computation from scratch
//! against the published tables and bases.

use serde::{Deserialize, Serialize};

use super::fixtures::{self, Erratum, E7};
use super::scan::{classify, Clause, Verdict};
use super::LabError;
use crate::lattice::{GroupOrder, Lattice, QuotientReport};
use crate::quandle::Quandle;
use crate::ring::{ebasis_product, format_terms, DeltaTower, Mode};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepResult {
    pub step: usize,
    pub name: String,
    pub passed: bool,
    /// Entries checked, or the mismatches found.
    pub details: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct TheoremReport {
    pub steps: Vec<StepResult>,
    pub errata: Vec<Erratum>,
    pub quotient: QuotientReport<Int>,
    pub clause: Clause,
    pub verdict: Verdict,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }
}

fn to_int(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn span(vs: &[E7]) -> Result<Lattice<Int>, LabError> {
    let gens: Vec<Vec<Int>> = vs.iter().map(|v| to_int(v)).collect();
    Ok(Lattice::from_generators(7, &gens)?)
}

fn compare_entry(details: &mut Vec<String>, label: String, got: &[Int], expected: &E7) -> bool {
    if got == to_int(expected).as_slice() {
        true
    } else {
        details.push(format!(
            "{label}: recomputed {}, fixture {}",
            format_terms("e", 1, got),
            format_terms("e", 1, expected)
        ));
        false
    }
}

fn lattice_step(step: usize, name: &str, computed: &Lattice<Int>, fixture: &[E7]) -> Result<StepResult, LabError> {
    let expected = span(fixture)?;
    let passed = computed.equals(&expected)?;
    let details = if passed {
        vec![format!("rank {} lattice, canonical bases identical", computed.rank())]
    } else {
        vec![
            format!("computed basis {:?}", computed.basis().to_rows()),
            format!("fixture span basis {:?}", expected.basis().to_rows()),
        ]
    };
    Ok(StepResult { step, name: name.into(), passed, details })
}

pub fn verify_theorem_r8() -> Result<TheoremReport, LabError> {
    let q = Quandle::dihedral(8)?;
    let mut steps = Vec::with_capacity(5);

    let mut details = Vec::new();
    let mut ok = true;
    for i in 1..=7 {
        for j in 1..=3 {
            let p = ebasis_product::<Int>(&q, i, j)?;
            ok &= compare_entry(&mut details, format!("e{i}*e{j}"), p.coords(), &fixtures::E_PRODUCTS[i - 1][j - 1]);
        }
    }
    if ok {
        details.push("21 entries match".into());
    }
    steps.push(StepResult { step: 1, name: "e_i * e_j table".into(), passed: ok, details });

    let mut tower = DeltaTower::<Int>::new(&q, Mode::Right)?;
    let d2 = tower.power(2)?.clone();
    steps.push(lattice_step(2, "Δ^2(R_8) = span(B_2)", &d2, &fixtures::B2)?);

    let mut details = Vec::new();
    let mut ok = true;
    for (r, u) in fixtures::B2.iter().enumerate() {
        for j in 1..=3 {
            let p = tower.products().right_multiply(&to_int(u), j)?;
            ok &= compare_entry(&mut details, format!("u{}*e{j}", r + 1), &p, &fixtures::U_PRODUCTS[r][j - 1]);
        }
    }
    if ok {
        details.push("18 entries match".into());
    }
    steps.push(StepResult { step: 3, name: "u_i * e_j table".into(), passed: ok, details });

    let d3 = tower.power(3)?.clone();
    steps.push(lattice_step(4, "Δ^3(R_8) = span(B_3)", &d3, &fixtures::B3)?);

    let quotient = tower.quotient(2)?;
    let expected = QuotientReport {
        free_rank: 0,
        torsion: to_int(&fixtures::QUOTIENT_TORSION),
        order: GroupOrder::Finite(Int::from(fixtures::QUOTIENT_ORDER)),
    };
    let passed = quotient == expected;
    steps.push(StepResult {
        step: 5,
        name: "Δ^2(R_8)/Δ^3(R_8)".into(),
        passed,
        details: vec![format!("{quotient}, order {}", quotient.order)],
    });

    let (clause, verdict) = classify(8, 2, &quotient);
    Ok(TheoremReport { steps, errata: fixtures::errata(), quotient, clause, verdict })
}
