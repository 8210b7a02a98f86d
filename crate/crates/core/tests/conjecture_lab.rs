use quandle_augment::lab::{check_lemmas, scan, verify_theorem_r8, Clause, ScanConfig, ScanRow, Verdict};
use quandle_augment::{delta_quotient, GroupOrder, Int, Mode, Quandle};

#[test]
fn lemma_suite_to_24() {
    let r = check_lemmas(24).unwrap();
    assert!(r.passed(), "{:?}", r.violations);
    assert_eq!(r.orders.len(), 11);
    // sum over n = 2k of (n - 1) zero-column checks
    assert_eq!(r.zero_column_checks, (4..=24).step_by(2).map(|n| n - 1).sum::<usize>());
}

#[test]
fn odd_orders_are_cyclic_of_order_n() {
    let rows = scan(&ScanConfig::new((3, 11), (1, 4), Mode::Right)).unwrap();
    for r in rows.iter().filter(|r| r.n % 2 == 1) {
        assert_eq!(r.clause, Clause::OddClause);
        assert_eq!(r.verdict, Verdict::Consistent, "n={} k={}", r.n, r.k);
        let q = r.quotient.as_ref().unwrap();
        assert_eq!((q.free_rank, q.torsion.clone()), (0, vec![Int::from(r.n)]));
    }
}

#[test]
fn order_four_clause() {
    let q = Quandle::dihedral(4).unwrap();
    assert_eq!(delta_quotient::<Int>(&q, 2, Mode::Right).unwrap().order, GroupOrder::Finite(Int::from(4)));
}

#[test]
fn theorem_replay_is_deterministic_and_passes() {
    let a = verify_theorem_r8().unwrap();
    assert!(a.passed());
    assert_eq!(a, verify_theorem_r8().unwrap());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&verify_theorem_r8().unwrap()).unwrap());
}

#[test]
fn scan_finds_the_order_eight_counterexample() {
    let mut cfg = ScanConfig::new((3, 12), (1, 4), Mode::Right);
    let first: Vec<_> = scan(&cfg).unwrap().iter().map(ScanRow::record).collect();
    cfg.jobs = 3;
    let second: Vec<_> = scan(&cfg).unwrap().iter().map(ScanRow::record).collect();
    assert_eq!(first, second);
    assert_eq!(first.len(), 40);
    let hit = first.iter().find(|r| (r.n, r.k) == (8, 2)).unwrap();
    assert_eq!(hit.verdict, Verdict::Counterexample);
    assert_eq!(hit.order.as_deref(), Some("16"));
    // n = 4 is the only even order in range that satisfies the even clause
    for r in first.iter().filter(|r| r.clause == Clause::EvenClause) {
        assert_eq!(r.verdict == Verdict::Consistent, r.n == 4, "n={} k={}", r.n, r.k);
    }
}
