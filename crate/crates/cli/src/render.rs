//! Text, CSV and JSON renderings of a [`ReportDocument`].

use std::fmt::Write as _;

use quandle_augment::lab::{ScanRecord, StepResult};
use quandle_augment::{Int, Lattice};

use crate::report::{
    Format, QuotientResult, ReportDocument, Results, ScanResult, TableResult, ValidateResult, VerifyResult,
};
use crate::CliError;

pub fn render(doc: &ReportDocument, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).map_err(|e| output_error(format, e))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv(doc),
        Format::Text => Ok(text(doc)),
    }
}

fn output_error(format: Format, e: impl std::fmt::Display) -> CliError {
    CliError::Output { format, message: e.to_string() }
}

fn csv(doc: &ReportDocument) -> Result<String, CliError> {
    let err = |e: csv::Error| output_error(Format::Csv, e);
    let mut w = csv::Writer::from_writer(Vec::new());
    match &doc.results {
        Results::Scan(s) => {
            w.write_record(["n", "k", "mode", "free_rank", "torsion", "order", "clause", "verdict"]).map_err(err)?;
            for r in &s.rows {
                w.write_record(scan_fields(r)).map_err(err)?;
            }
        }
        Results::Table(t) => {
            w.write_record(std::iter::once("").chain(t.column_labels.iter().map(String::as_str))).map_err(err)?;
            for (label, row) in t.row_labels.iter().zip(&t.entries) {
                w.write_record(std::iter::once(label).chain(row)).map_err(err)?;
            }
        }
        Results::Quotient(q) => {
            w.write_record(["quandle", "k", "mode", "free_rank", "torsion", "order"]).map_err(err)?;
            w.write_record([
                q.quandle.clone(),
                q.k.to_string(),
                q.mode.to_string(),
                q.quotient.free_rank.to_string(),
                join_torsion(&q.quotient.torsion),
                q.quotient.order.to_string(),
            ])
            .map_err(err)?;
        }
        Results::VerifyPaper(v) => {
            w.write_record(["step", "name", "passed"]).map_err(err)?;
            w.write_record([
                "lemmas".to_string(),
                "even-order product identities".into(),
                v.lemmas.passed().to_string(),
            ])
            .map_err(err)?;
            for s in &v.theorem.steps {
                w.write_record([s.step.to_string(), s.name.clone(), s.passed.to_string()]).map_err(err)?;
            }
        }
        Results::Validate(v) => {
            w.write_record(["quandle", "valid", "order", "violations"]).map_err(err)?;
            w.write_record([
                v.quandle.clone(),
                v.valid.to_string(),
                v.order.map(|o| o.to_string()).unwrap_or_default(),
                v.violations.len().to_string(),
            ])
            .map_err(err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| output_error(Format::Csv, e))?;
    String::from_utf8(bytes).map_err(|e| output_error(Format::Csv, e))
}

fn join_torsion(t: &[Int]) -> String {
    t.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn scan_fields(r: &ScanRecord) -> [String; 8] {
    [
        r.n.to_string(),
        r.k.to_string(),
        r.mode.to_string(),
        r.free_rank.map(|f| f.to_string()).unwrap_or_default(),
        r.torsion.clone().unwrap_or_default(),
        r.order.clone().unwrap_or_default(),
        r.clause.to_string(),
        r.verdict.to_string(),
    ]
}

fn text(doc: &ReportDocument) -> String {
    let mut out = match &doc.results {
        Results::Table(t) => table_text(t),
        Results::Quotient(q) => quotient_text(q),
        Results::VerifyPaper(v) => verify_text(v, doc),
        Results::Scan(s) => scan_text(s),
        Results::Validate(v) => validate_text(v),
    };
    if !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

/// Left-aligned columns separated by two spaces.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn table_text(t: &TableResult) -> String {
    let sym = match t.basis {
        crate::Basis::A => "a",
        crate::Basis::E => "e",
    };
    let mut out = format!("{} (order {}), products {sym}_i * {sym}_j (row i, column j)\n", t.quandle, t.order);
    let mut rows = vec![std::iter::once("*".to_string()).chain(t.column_labels.iter().cloned()).collect::<Vec<_>>()];
    for (label, row) in t.row_labels.iter().zip(&t.entries) {
        rows.push(std::iter::once(label.clone()).chain(row.iter().cloned()).collect());
    }
    out.push_str(&aligned(&rows));
    out
}

fn basis_text(out: &mut String, title: &str, l: &Lattice<Int>) {
    let _ = writeln!(out, "{title}: rank {} in Z^{}", l.rank(), l.ambient_dim());
    for row in l.basis().rows() {
        let _ = writeln!(out, "  {}", quandle_augment::ring::format_terms("e", 1, row));
    }
}

fn quotient_text(q: &QuotientResult) -> String {
    let mut out = format!("{} (order {}), k = {}, mode = {}\n", q.quandle, q.order, q.k, q.mode);
    basis_text(&mut out, &format!("Delta^{}", q.k), &q.upper);
    basis_text(&mut out, &format!("Delta^{}", q.k + 1), &q.lower);
    let _ = writeln!(out, "free_rank: {}", q.quotient.free_rank);
    let _ = writeln!(out, "torsion: [{}]", join_torsion(&q.quotient.torsion).replace(';', ", "));
    let _ = writeln!(out, "order: {}", q.quotient.order);
    let _ = writeln!(out, "Delta^{}/Delta^{} = {}", q.k, q.k + 1, q.structure);
    out
}

fn step_line(s: &StepResult) -> String {
    format!("[{}] step {}: {}", if s.passed { "PASS" } else { "FAIL" }, s.step, s.name)
}

fn verify_text(v: &VerifyResult, doc: &ReportDocument) -> String {
    let mut out = String::new();
    let l = &v.lemmas;
    let _ = writeln!(
        out,
        "[{}] lemmas for even n = 4..{}: {} zero-column checks, {} shift checks, {} violations",
        if l.passed() { "PASS" } else { "FAIL" },
        l.n_max,
        l.zero_column_checks,
        l.shift_checks,
        l.violations.len()
    );
    for viol in &l.violations {
        let _ = writeln!(out, "  {viol:?}");
    }
    for s in &v.theorem.steps {
        let _ = writeln!(out, "{}", step_line(s));
        if !s.passed {
            for d in &s.details {
                let _ = writeln!(out, "  {d}");
            }
        }
    }
    let _ = writeln!(out, "errata ({}):", doc.errata.len());
    for e in &doc.errata {
        let _ =
            writeln!(out, "  {} [{}, {}]: printed {}, recomputed {}", e.table, e.row, e.column, e.printed, e.corrected);
    }
    let _ = writeln!(out, "verdict for (n, k) = (8, 2): {} ({})", v.theorem.verdict, v.theorem.clause);
    let _ = writeln!(out, "overall: {}", if v.passed { "PASS" } else { "FAIL" });
    let _ = writeln!(out, "Delta^2(R_8)/Delta^3(R_8) = {}", v.structure);
    out
}

fn scan_text(s: &ScanResult) -> String {
    let mut rows =
        vec![["n", "k", "mode", "free_rank", "torsion", "order", "clause", "verdict"].map(String::from).to_vec()];
    rows.extend(s.rows.iter().map(|r| {
        let mut f = scan_fields(r).to_vec();
        for cell in &mut f[3..6] {
            if cell.is_empty() {
                *cell = "-".into();
            }
        }
        f
    }));
    let mut out = aligned(&rows);
    let m = &s.summary;
    let _ = writeln!(
        out,
        "summary: consistent={} counterexample={} not_applicable={} resource_limit={}",
        m.consistent, m.counterexample, m.not_applicable, m.resource_limit
    );
    out
}

fn validate_text(v: &ValidateResult) -> String {
    let mut out = String::new();
    if v.valid {
        let _ = writeln!(
            out,
            "{}: valid quandle of order {}{}",
            v.quandle,
            v.order.unwrap_or(0),
            v.name.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
        );
    } else {
        let _ = writeln!(out, "{}: invalid", v.quandle);
        if let Some(m) = &v.message {
            let _ = writeln!(out, "  {m}");
        }
    }
    out
}
