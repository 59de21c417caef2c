//! Corpus-level behaviour of the check harness.

mod common;

use common::group;
use mnn::corpus::{corpus_generate, CorpusId};
use mnn::group::Caps;
use mnn::harness::{run_check, run_suite, CheckId, Status};

fn families() -> Vec<mnn::corpus::CorpusEntry> {
    corpus_generate(CorpusId::Families, &Caps::default()).unwrap()
}

#[test]
fn report_is_independent_of_parallelism() {
    let entries = corpus_generate(CorpusId::S5Subgroups, &Caps::default()).unwrap();
    let one = run_suite(&entries, &CheckId::ALL, 1, Caps::default());
    let four = run_suite(&entries, &CheckId::ALL, 4, Caps::default());
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&four).unwrap()
    );
    for t in one.tallies.values() {
        assert_eq!(t.total(), entries.len());
    }
}

#[test]
fn empty_check_set() {
    let r = run_suite(&families(), &[], 2, Caps::default());
    assert!(r.tallies.is_empty() && r.reports.is_empty() && !r.failed());
}

/// The exact set of failing (check, group) pairs over the whole corpus.
#[test]
fn known_counterexamples() {
    let entries = corpus_generate(CorpusId::All, &Caps::default()).unwrap();
    let r = run_suite(&entries, &CheckId::ALL, 0, Caps::default());
    let mut got: Vec<(String, String)> = r
        .failures
        .iter()
        .map(|f| (f.check_id.to_string(), f.group_label.clone()))
        .collect();
    got.sort();
    let mut expected: Vec<(String, String)> = [
        ("C4", "fam/A(4) x C(2)"),
        ("C4", "fam/A(4) x C(5)"),
        ("L1", "fam/D(12)"),
        ("L1", "fam/F(5,6)"),
        ("L1", "fam/F(7,6)"),
        ("L1", "fam/S(3) x C(2)"),
        ("L1", "fam/S(4)"),
        ("L1", "s4/cls-010"),
        ("L1", "s5/cls-013"),
        ("L1", "s5/cls-016"),
        ("T1", "fam/A(4) x C(2)"),
        ("T1", "fam/A(4) x C(5)"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    expected.sort();
    assert_eq!(got, expected);

    for f in &r.failures {
        let report = r
            .reports
            .iter()
            .find(|x| x.check_id == f.check_id && x.group_label == f.group_label)
            .unwrap();
        match f.check_id {
            CheckId::L1 => {
                assert_eq!(report.witness["forward"], true);
                assert_eq!(report.witness["backward"], false);
            }
            _ => assert_eq!(report.witness["supersolvable"], false),
        }
    }
}

#[test]
fn vacuity_accounting_on_families() {
    let r = run_suite(&families(), &CheckId::ALL, 0, Caps::default());
    for c in [
        CheckId::L2,
        CheckId::R2,
        CheckId::R3,
        CheckId::T1,
        CheckId::C4,
        CheckId::L3,
    ] {
        assert!(r.tallies[&c].pass > 0, "{c}");
    }
    assert_eq!(
        r.tallies[&CheckId::P2].pass + r.tallies[&CheckId::P2].fail,
        0
    );
    let skipped: Vec<&str> = r
        .reports
        .iter()
        .filter(|x| x.status == Status::Skipped)
        .map(|x| x.group_label.as_str())
        .collect();
    assert!(skipped.iter().all(|l| *l == "fam/F(3,5)"));
    let t1_strict = r
        .for_check(CheckId::T1)
        .filter(|x| x.status == Status::Pass && x.witness["derived_equals_k"] == false)
        .count();
    assert!(t1_strict >= 2);
}

#[test]
fn worked_examples() {
    let caps = Caps::default();
    let r = run_check(CheckId::T1, "S3xC3", &group("S(3) x C(3)"), caps);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness["chain"], serde_json::json!([1, 3, 9, 18]));
    assert_eq!(
        r.witness["ved_factors"],
        serde_json::json!([{ "p": 3, "m": 1, "d": 2 }])
    );

    assert_eq!(
        run_check(CheckId::Hall, "D8", &group("D(8)"), caps).status,
        Status::Pass
    );
    assert_eq!(
        run_check(CheckId::Ved, "S4", &group("S(4)"), caps).status,
        Status::Pass
    );
    let r = run_check(CheckId::L2, "S3xC5", &group("S(3) x C(5)"), caps);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(
        (r.witness["index"].as_u64(), r.witness["k_order"].as_u64()),
        (Some(5), Some(6))
    );
}
