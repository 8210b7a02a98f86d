use std::io::Write;
use std::process::{Command, Output};

use clap::Parser;
use quandle_augment::lab::{ScanRecord, Verdict};
use quandle_augment::{GroupOrder, Int};
use quandle_augment_cli::{execute, render, Cli, ExitStatus, Format, ReportDocument, Results};

fn run(args: &[&str]) -> (ReportDocument, ExitStatus) {
    let cli = Cli::try_parse_from(std::iter::once("quandle-augment").chain(args.iter().copied())).unwrap();
    let o = execute(&cli).unwrap();
    (o.document, o.status)
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quandle-augment")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    bin(args).status.code().unwrap()
}

#[test]
fn e_table_entries() {
    let (doc, _) = run(&["table", "dihedral:8", "--basis", "e"]);
    let Results::Table(t) = doc.results else { panic!() };
    assert_eq!(t.entries[0][0], "e1 - e2 - e7");
    assert!(t.entries.iter().all(|row| row[3] == "0"));
    assert_eq!(t.entries.len(), 7);
    assert_eq!(t.column_labels, ["e1", "e2", "e3", "e4", "e5", "e6", "e7"]);
}

#[test]
fn trivial_rows_are_constant() {
    let (doc, _) = run(&["table", "trivial:3", "--basis", "a"]);
    let Results::Table(t) = doc.results else { panic!() };
    for (i, row) in t.entries.iter().enumerate() {
        assert!(row.iter().all(|x| *x == format!("a{i}")));
    }
}

#[test]
fn quotient_examples() {
    let expect = |args: &[&str], free: usize, torsion: &[i64]| {
        let (doc, status) = run(args);
        assert_eq!(status, ExitStatus::Success);
        let Results::Quotient(q) = doc.results else { panic!() };
        assert_eq!(q.quotient.free_rank, free, "{args:?}");
        assert_eq!(q.quotient.torsion, torsion.iter().map(|&t| Int::from(t)).collect::<Vec<_>>(), "{args:?}");
        assert!(q.lower.is_sublattice_of(&q.upper).unwrap());
        q
    };
    let q = expect(&["quotient", "dihedral:8", "--k", "2"], 0, &[4, 4]);
    assert_eq!(q.quotient.order, GroupOrder::Finite(Int::from(16)));
    assert_eq!(q.structure, "Z_4 (+) Z_4");
    expect(&["quotient", "dihedral:3", "--k", "1"], 0, &[3]);
    expect(&["quotient", "dihedral:8", "--k", "1"], 1, &[4]);
    expect(&["quotient", "dihedral:8", "--k", "2", "--mode", "two-sided"], 0, &[4, 4]);
}

#[test]
fn verify_paper_report() {
    let (doc, status) = run(&["verify-paper"]);
    assert_eq!(status, ExitStatus::Success);
    assert_eq!(doc.errata.len(), 2);
    let text = render(&doc, Format::Text).unwrap();
    assert!(text.trim_end().lines().last().unwrap().ends_with("Z_4 (+) Z_4"));
    let Results::VerifyPaper(v) = doc.results else { panic!() };
    assert!(v.passed);
    assert!(v.lemmas.violations.is_empty());
    assert_eq!(v.lemmas.orders, (4..=24).step_by(2).collect::<Vec<_>>());
    assert_eq!(v.theorem.steps.len(), 5);
}

#[test]
fn scan_examples() {
    let (doc, status) = run(&["scan", "--n", "3..9", "--k", "1..3"]);
    assert_eq!(status, ExitStatus::Success);
    let Results::Scan(s) = doc.results else { panic!() };
    assert_eq!(s.rows.len(), 7 * 3);
    let cell = |n, k| s.rows.iter().find(|r| (r.n, r.k) == (n, k)).unwrap();
    assert_eq!((cell(8, 2).order.as_deref(), cell(8, 2).verdict), (Some("16"), Verdict::Counterexample));
    assert_eq!((cell(7, 2).torsion.as_deref(), cell(7, 2).verdict), (Some("7"), Verdict::Consistent));
    assert_eq!((cell(4, 2).order.as_deref(), cell(4, 2).verdict), (Some("4"), Verdict::Consistent));
    assert_eq!(s.summary.consistent + s.summary.counterexample + s.summary.not_applicable, 21);
}

#[test]
fn json_round_trips_for_every_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r3.json");
    std::fs::write(&path, r#"{"order": 3, "table": [[0,2,1],[2,1,0],[1,0,2]]}"#).unwrap();
    let file = format!("file:{}", path.display());
    let corpus: Vec<Vec<&str>> = vec![
        vec!["table", "dihedral:5"],
        vec!["table", "dihedral:8", "--basis", "e"],
        vec!["table", &file, "--basis", "e"],
        vec!["quotient", "dihedral:8", "--k", "2"],
        vec!["quotient", "trivial:4", "--k", "1", "--mode", "two-sided"],
        vec!["verify-paper"],
        vec!["scan", "--n", "3..8", "--k", "1..3", "--limit", "20"],
        vec!["validate", &file],
    ];
    for args in corpus {
        let (doc, _) = run(&args);
        let js = render(&doc, Format::Json).unwrap();
        let back: ReportDocument = serde_json::from_str(&js).unwrap();
        assert_eq!(back, doc, "{args:?}");
        assert_eq!(back.schema_version, 1);
    }
}

#[test]
fn csv_and_json_rows_agree() {
    let args = ["--format", "csv", "scan", "--n", "3..10", "--k", "1..4", "--limit", "30"];
    let out = bin(&args);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let from_csv: Vec<ScanRecord> = reader.deserialize().collect::<Result<_, _>>().unwrap();

    let out = bin(&["--format", "json", "scan", "--n", "3..10", "--k", "1..4", "--limit", "30"]);
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let Results::Scan(s) = doc.results else { panic!() };
    assert_eq!(from_csv, s.rows);
    assert!(s.rows.iter().any(|r| r.verdict == Verdict::ResourceLimit));
}

#[test]
fn parallel_scan_payload_matches_serial() {
    let (a, _) = run(&["scan", "--n", "3..12", "--k", "1..4"]);
    let (b, _) = run(&["scan", "--n", "3..12", "--k", "1..4", "--jobs", "4"]);
    assert_eq!(a.payload(), b.payload());
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["quotient", "dihedral:8", "--k", "2"]), 0);
    assert_eq!(code(&["verify-paper"]), 0);
    // counterexamples are findings
    assert_eq!(code(&["scan", "--n", "8..8", "--k", "2..2"]), 0);

    assert_eq!(code(&["quotient", "dihedral:8", "--k", "0"]), 2);
    assert_eq!(code(&["quotient", "circle:8", "--k", "1"]), 2);
    assert_eq!(code(&["scan", "--n", "3..x", "--k", "1..2"]), 2);
    assert_eq!(code(&["scan", "--n", "2..5", "--k", "1..2"]), 2);
    assert_eq!(code(&["table", "dihedral:4", "--basis", "q"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["validate", "file:/nonexistent/q.json"]), 2);

    assert_eq!(code(&["scan", "--n", "3..5", "--k", "1..2", "--limit", "2"]), 3);
    assert_eq!(code(&["scan", "--n", "3..5", "--k", "1..2", "--limit", "6"]), 0);
    assert_eq!(code(&["quotient", "dihedral:12", "--k", "4", "--limit", "10"]), 3);
}

#[test]
fn validate_reports_violations() {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    writeln!(f, "name = \"broken\"\norder = 3\ntable = [[0, 0, 0], [1, 1, 2], [2, 1, 2]]").unwrap();
    let sel = format!("file:{}", f.path().display());
    let out = bin(&["--format", "json", "validate", &sel]);
    assert_eq!(out.status.code(), Some(1));
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let Results::Validate(v) = doc.results else { panic!() };
    assert!(!v.valid);
    assert!(!v.violations.is_empty());

    let mut g = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    writeln!(g, "order = 4\ntable = [[0, 0, 0], [1, 1, 1], [2, 2, 2]]").unwrap();
    assert_eq!(code(&["validate", &format!("file:{}", g.path().display())]), 1);

    let mut h = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    write!(h, "{{ not json").unwrap();
    assert_eq!(code(&["validate", &format!("file:{}", h.path().display())]), 2);

    assert_eq!(code(&["validate", "dihedral:6"]), 0);
}

#[test]
fn file_quandle_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r8.json");
    let table: Vec<Vec<usize>> = (0..8).map(|i| (0..8).map(|j| (2 * j + 8 - i) % 8).collect()).collect();
    std::fs::write(&path, serde_json::json!({ "order": 8, "table": table }).to_string()).unwrap();
    let (a, _) = run(&["quotient", &format!("file:{}", path.display()), "--k", "2"]);
    let (b, _) = run(&["quotient", "dihedral:8", "--k", "2"]);
    let (Results::Quotient(a), Results::Quotient(b)) = (a.results, b.results) else { panic!() };
    assert_eq!((a.upper, a.lower, a.quotient), (b.upper, b.lower, b.quotient));
}
