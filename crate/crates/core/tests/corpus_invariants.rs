//! Structural identities checked on every group of the full corpus.

mod common;

use std::sync::OnceLock;

use mnn::classify::{
    frobenius_recognize, is_schmidt, is_supersolvable, ved_decomposition, MnnProfile,
};
use mnn::corpus::{corpus_generate, spectrum_consistent, CorpusEntry, CorpusId};
use mnn::group::Caps;
use mnn::lattice::{self, SubgroupLattice};
use mnn::series::{self, SeriesProfile};

fn corpus() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| corpus_generate(CorpusId::All, &Caps::default()).unwrap())
}

/// Corpus entries whose lattice fits under the default cap.
fn with_lattice() -> impl Iterator<Item = (&'static CorpusEntry, SubgroupLattice)> {
    corpus()
        .iter()
        .filter_map(|e| SubgroupLattice::build(&e.group).ok().map(|l| (e, l)))
}

#[test]
fn generation_is_deterministic() {
    let a = corpus_generate(CorpusId::All, &Caps::default()).unwrap();
    let b = corpus_generate(CorpusId::All, &Caps::default()).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.label, y.label);
        assert_eq!(x.group.elements(), y.group.elements());
    }
    let s5 = corpus_generate(CorpusId::S5Subgroups, &Caps::default()).unwrap();
    assert_eq!(s5.len(), 19);
    assert!(s5.iter().all(|e| 120 % e.group.order() == 0));
}

#[test]
fn lattice_cap_excludes_only_the_large_family() {
    let skipped: Vec<&str> = corpus()
        .iter()
        .filter(|e| SubgroupLattice::build(&e.group).is_err())
        .map(|e| e.label.as_str())
        .collect();
    assert_eq!(skipped, vec!["fam/F(3,5)"]);
}

#[test]
fn series_identities() {
    for e in corpus() {
        let g = &e.group;
        assert!(spectrum_consistent(g), "{}", e.label);
        let s = SeriesProfile::compute(g).unwrap();
        assert_eq!(
            s.lower_central.get(1),
            s.derived_series.get(1),
            "{}",
            e.label
        );
        let gamma_trivial = s.gamma_infinity().is_trivial();
        let hyper_full = s.hypercenter().order() == g.order();
        assert_eq!(gamma_trivial, hyper_full, "{}", e.label);
        assert_eq!(gamma_trivial, s.is_nilpotent(), "{}", e.label);
        let (nil, sol) = series::nilpotent_solvable(g).unwrap();
        assert_eq!(
            (nil, sol),
            (s.is_nilpotent(), s.is_solvable()),
            "{}",
            e.label
        );
    }
}

#[test]
fn mnn_identities() {
    for (e, l) in with_lattice() {
        let g = &e.group;
        let p = MnnProfile::compute(g, &l);
        let nilpotent = series::subgroup_is_nilpotent(g, &g.whole());
        assert_eq!(p.m == 0, nilpotent, "{}", e.label);
        if p.m >= 1 {
            assert!(p.members.contains(&g.whole()), "{}", e.label);
        }
        assert_eq!(p.m == 1, is_schmidt(g, &l).unwrap(), "{}", e.label);
        for s in &p.schmidt_subgroups {
            let sg = g.subgroup_as_group(s);
            let sl = SubgroupLattice::build(&sg).unwrap();
            assert!(
                sl.maximal_subgroups()
                    .all(|h| series::subgroup_is_nilpotent(&sg, h)),
                "{}",
                e.label
            );
        }
    }
}

#[test]
fn supersolvability_implications() {
    for (e, l) in with_lattice() {
        let g = &e.group;
        let ss = is_supersolvable(g, &l).unwrap().supersolvable;
        let (nil, sol) = series::nilpotent_solvable(g).unwrap();
        assert!(!ss || sol, "{}", e.label);
        assert!(!nil || ss, "{}", e.label);
    }
}

#[test]
fn frobenius_and_ved_certificates_reverify() {
    for e in corpus() {
        let g = &e.group;
        if g.order() > 200 {
            continue;
        }
        if let Some(c) = frobenius_recognize(g) {
            assert!(c.verify(g), "{}", e.label);
        }
        let v = ved_decomposition(g).unwrap();
        if v.status.is_success() {
            assert!(v.verify(), "{}", e.label);
            for f in &v.factors {
                assert!(
                    f.certificate.as_ref().unwrap().verify(&f.group),
                    "{}",
                    e.label
                );
            }
        }
    }
}

#[test]
fn norm_wielandt_schenkman() {
    for (e, l) in with_lattice() {
        let g = &e.group;
        let (omega, norm) = lattice::wielandt_and_norm(g, &l);
        assert!(norm.is_subgroup_of(&omega), "{}", e.label);
        let z2 = SeriesProfile::compute(g).unwrap().center_term(2).clone();
        assert!(norm.is_subgroup_of(&z2), "{}", e.label);
    }
}

#[test]
fn subnormal_defect_bounded_by_class() {
    for (e, l) in with_lattice() {
        let g = &e.group;
        let Some(class) = SeriesProfile::compute(g).unwrap().nilpotency_class else {
            continue;
        };
        for s in l.subgroups() {
            let r = lattice::subnormal_defect(g, s);
            assert!(r.subnormal && r.defect.unwrap() <= class, "{}", e.label);
        }
    }
}

#[test]
fn normal_closure_is_minimal_normal_overgroup() {
    for (e, l) in with_lattice().filter(|(e, _)| e.group.order() <= 24) {
        let g = &e.group;
        let normals: Vec<_> = l.normal_subgroups().collect();
        for s in l.subgroups() {
            let nc = g.normal_closure(s);
            assert!(g.is_normal(&nc) && s.is_subgroup_of(&nc), "{}", e.label);
            assert!(
                normals
                    .iter()
                    .filter(|n| s.is_subgroup_of(n))
                    .all(|n| nc.is_subgroup_of(n)),
                "{}",
                e.label
            );
        }
    }
}
