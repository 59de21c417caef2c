//! The worked examples of each operation, checked against brute-force
//! oracles on explicit permutation sets where the value is derived.

mod common;

use common::*;
use mnn::classify::{
    all_schmidt_subnormal, dedekind_tgroup, direct_decomposition, frobenius_recognize, is_schmidt,
    is_supersolvable, ved_decomposition, MnnProfile,
};
use mnn::constructors::{cyclic_semidirect, direct_product, frobenius_fpd};
use mnn::group::FiniteGroup;
use mnn::lattice::{self, SubgroupLattice};
use mnn::perm::Permutation;
use mnn::series::{self, SeriesProfile};

fn s3() -> FiniteGroup {
    group("S(3)")
}

/// A non-central involution of D8.
fn reflection(d8: &FiniteGroup) -> usize {
    let z = d8.center();
    d8.ids()
        .find(|&e| d8.element_order(e) == 2 && !z.contains(e))
        .unwrap()
}

#[test]
fn permutation_algebra() {
    let a = perm(3, &[&[0, 1, 2]]);
    let t = perm(3, &[&[0, 1]]);
    assert_eq!(mul(&a, &t).order(), 2);
    let t2 = perm(2, &[&[0, 1]]);
    assert!(mul(&t2, &t2).is_identity());
    assert_eq!(a.invert(), perm(3, &[&[0, 2, 1]]));
    assert_eq!(a.apply(0), 1);
    assert!(a.compose(&t2).is_err());
}

#[test]
fn generation() {
    let g = FiniteGroup::generate(3, vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(FiniteGroup::generate(3, vec![]).unwrap().order(), 1);
    let gens = vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])];
    let g = FiniteGroup::generate(5, gens.clone()).unwrap();
    assert_eq!(g.order(), closure(5, &gens).len());
    assert_eq!(g.order(), 120);
}

#[test]
fn joins() {
    let g = s3();
    let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
    assert_eq!(a3.order(), 3);
    assert!(g.join_subgroup(&[]).unwrap().is_trivial());
    let gens = [perm(3, &[&[0, 1]]), perm(3, &[&[1, 2]])];
    assert_eq!(g.join_subgroup(&gens).unwrap(), g.whole());
    assert_eq!(perms_of(&g, &a3), closure(3, &[perm(3, &[&[0, 1, 2]])]));
}

#[test]
fn centers() {
    for (expr, order) in [("S(3)", 1), ("D(8)", 2), ("C(12)", 12)] {
        let g = group(expr);
        let z = g.center();
        assert_eq!(z.order(), order, "{expr}");
        assert_eq!(perms_of(&g, &z), center(&all_perms(&g)), "{expr}");
    }
}

#[test]
fn normalizers() {
    let g = s3();
    let t = g.join_subgroup(&[perm(3, &[&[0, 1]])]).unwrap();
    let (n, normal) = g.normalizer_normality(&t);
    assert_eq!((n.order(), normal), (2, false));
    let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
    let (n, normal) = g.normalizer_normality(&a3);
    assert_eq!((n, normal), (g.whole(), true));
    assert!(is_normal(&all_perms(&g), &perms_of(&g, &a3)));
    let (n, normal) = g.normalizer_normality(&g.whole());
    assert_eq!((n, normal), (g.whole(), true));
}

#[test]
fn commutators() {
    for (expr, order) in [("S(3)", 3), ("C(6)", 1), ("D(8)", 2)] {
        let g = group(expr);
        let d = g.commutator(&g.whole(), &g.whole());
        assert_eq!(d.order(), order, "{expr}");
        assert_eq!(
            perms_of(&g, &d),
            derived(g.degree(), &all_perms(&g)),
            "{expr}"
        );
    }
    let d8 = group("D(8)");
    assert_eq!(d8.derived_subgroup(&d8.whole()), d8.center());
}

#[test]
fn normal_closures() {
    let g = s3();
    let t = g.join_subgroup(&[perm(3, &[&[0, 1]])]).unwrap();
    assert_eq!(g.normal_closure(&t), g.whole());
    let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
    assert_eq!(g.normal_closure(&a3), a3);

    let d8 = group("D(8)");
    let r = d8.closure(&[reflection(&d8)]);
    let nc = d8.normal_closure(&r);
    assert_eq!(nc.order(), 4);
    assert!(nc.elements().all(|e| d8.element_order(e) <= 2));
    let conjugates: Vec<Permutation> = d8
        .elements()
        .iter()
        .map(|y| conj(d8.element(reflection(&d8)), y))
        .collect();
    assert_eq!(perms_of(&d8, &nc), closure(d8.degree(), &conjugates));
}

#[test]
fn quotients() {
    let g = s3();
    let a3 = g.derived_subgroup(&g.whole());
    assert_eq!(g.quotient(&a3).unwrap().group.order(), 2);
    assert_eq!(g.quotient(&g.whole()).unwrap().group.order(), 1);
    let d8 = group("D(8)");
    let q = d8.quotient(&d8.center()).unwrap();
    assert_eq!(q.group.order(), 4);
    assert!(q.group.ids().all(|e| q.group.element_order(e) <= 2));
    for a in d8.ids() {
        for b in d8.ids() {
            let img = |e| q.projection.image_of(e);
            assert_eq!(img(d8.mul(a, b)), q.group.mul(img(a), img(b)));
        }
    }
}

#[test]
fn prime_spectra() {
    assert_eq!(s3().prime_spectrum(), vec![2, 3]);
    assert_eq!(group("S(3) x C(5)").prime_spectrum(), vec![2, 3, 5]);
}

#[test]
fn constructors() {
    let g = s3();
    assert_eq!(g.order(), 6);
    assert!(!SeriesProfile::compute(&g).unwrap().is_nilpotent());
    assert_eq!(group("C(1)").order(), 1);
    let d8 = SeriesProfile::compute(&group("D(8)")).unwrap();
    assert_eq!(d8.nilpotency_class, Some(2));

    assert_eq!(group("S(3) x C(3)").order(), 18);
    assert_eq!(group("S(3) x A(4)").order(), 72);
    let a4 = group("A(4)");
    let with_trivial = direct_product(&a4, &group("C(1)")).unwrap();
    assert_eq!(with_trivial.group.order(), 12);

    assert_eq!(cyclic_semidirect(3, 2, 2).unwrap().order(), 6);
    assert!(!cyclic_semidirect(3, 2, 2).unwrap().is_abelian());
    for (n, d, k) in [(7, 3, 2), (5, 4, 2)] {
        let g = cyclic_semidirect(n, d, k).unwrap();
        assert_eq!(g.order(), n * d);
        let c = frobenius_recognize(&g).unwrap();
        assert_eq!((c.kernel.order(), c.complement.order()), (n, d));
    }
    assert!(cyclic_semidirect(5, 2, 2).is_err());

    let f = frobenius_fpd(3, 2, None).unwrap();
    assert_eq!(f.order(), 6);
    let f = frobenius_fpd(2, 3, None).unwrap();
    assert_eq!(f.order(), 12);
    let mut orders: Vec<usize> = f.ids().map(|e| f.element_order(e)).collect();
    orders.sort();
    let mut a4_orders: Vec<usize> = a4.ids().map(|e| a4.element_order(e)).collect();
    a4_orders.sort();
    assert_eq!(orders, a4_orders);
    assert_eq!(frobenius_fpd(7, 3, None).unwrap().order(), 21);
}

#[test]
fn series_examples() {
    let orders = |v: &[mnn::group::Subgroup]| v.iter().map(|s| s.order()).collect::<Vec<_>>();
    assert_eq!(
        orders(&series::derived_series(&group("S(4)"))),
        vec![24, 12, 4, 1]
    );
    assert_eq!(orders(&series::derived_series(&group("C(6)"))), vec![6, 1]);
    assert_eq!(
        orders(&series::derived_series(&group("S(3) x C(3)"))),
        vec![18, 3, 1]
    );
    assert_eq!(orders(&series::lower_central_series(&s3())), vec![6, 3]);
    assert_eq!(
        orders(&series::lower_central_series(&group("D(8)"))),
        vec![8, 2, 1]
    );
    assert!(SeriesProfile::compute(&s3())
        .unwrap()
        .hypercenter()
        .is_trivial());
    assert_eq!(
        SeriesProfile::compute(&group("S(3) x C(3)"))
            .unwrap()
            .hypercenter()
            .order(),
        3
    );

    assert_eq!(
        series::nilpotent_solvable(&group("D(8)")).unwrap(),
        (true, true)
    );
    assert_eq!(series::nilpotent_solvable(&s3()).unwrap(), (false, true));
    let s5 = group("S(5)");
    let a5 = s5.derived_subgroup(&s5.whole());
    assert_eq!(a5.order(), 60);
    assert!(!series::subgroup_is_nilpotent(&s5, &a5));
    assert!(!series::subgroup_is_solvable(&s5, &a5));
    assert_eq!(
        series::nilpotent_solvable(&group("A(5)")).unwrap(),
        (false, false)
    );

    assert_eq!(series::sylow_subgroup(&group("S(4)"), 2).order(), 8);
    let g = s3();
    assert_eq!(
        series::sylow_subgroup(&g, 3),
        g.derived_subgroup(&g.whole())
    );
}

#[test]
fn lattice_examples() {
    let l = SubgroupLattice::build(&s3()).unwrap();
    assert_eq!(l.len(), 6);
    assert_eq!(SubgroupLattice::build(&group("C(12)")).unwrap().len(), 6);
    let mut max: Vec<usize> = l.maximal_subgroups().map(|s| s.order()).collect();
    max.sort();
    assert_eq!(max, vec![2, 2, 2, 3]);
    let c12 = SubgroupLattice::build(&group("C(12)")).unwrap();
    let mut max: Vec<usize> = c12.maximal_subgroups().map(|s| s.order()).collect();
    max.sort();
    assert_eq!(max, vec![4, 6]);
    let q8 = SubgroupLattice::build(&group("Q(8)")).unwrap();
    assert_eq!(q8.normal_subgroups().count(), 6);

    let g = s3();
    let t = g.join_subgroup(&[perm(3, &[&[0, 1]])]).unwrap();
    assert!(!lattice::is_subnormal(&g, &t));
    let d8 = group("D(8)");
    let l8 = SubgroupLattice::build(&d8).unwrap();
    assert!(l8.subgroups().iter().all(|s| lattice::is_subnormal(&d8, s)));

    let (omega, _) = lattice::wielandt_and_norm(&g, &l);
    assert_eq!(omega, g.whole());
    let (omega, _) = lattice::wielandt_and_norm(&d8, &l8);
    assert_eq!(omega, d8.center());
}

#[test]
fn classify_examples() {
    let p = |e: &str| {
        let g = group(e);
        let l = SubgroupLattice::build(&g).unwrap();
        (MnnProfile::compute(&g, &l), g, l)
    };
    let (m, g, _) = p("S(3) x C(3)");
    assert_eq!(m.m, 2);
    let k = m.k_subgroup.unwrap();
    assert_eq!(k.order(), 6);
    assert!(!is_nilpotent(g.degree(), &perms_of(&g, &k)));
    let (m, _, _) = p("S(4)");
    assert_eq!(m.m, 6);

    for (e, schmidt) in [("S(3)", true), ("A(4)", true), ("S(4)", false)] {
        let (_, g, l) = p(e);
        assert_eq!(is_schmidt(&g, &l).unwrap(), schmidt, "{e}");
    }
    for (e, ss) in [("S(3)", true), ("A(4)", false), ("S(3) x C(3)", true)] {
        let (_, g, l) = p(e);
        assert_eq!(is_supersolvable(&g, &l).unwrap().supersolvable, ss, "{e}");
    }
    for (e, dt) in [
        ("Q(8)", (true, true)),
        ("D(8)", (false, false)),
        ("S(3)", (false, true)),
    ] {
        let (_, g, l) = p(e);
        assert_eq!(dedekind_tgroup(&g, &l), dt, "{e}");
    }

    let c = frobenius_recognize(&s3()).unwrap();
    assert_eq!(
        (c.kernel.order(), c.complement.order(), c.fpd()),
        (3, 2, Some((3, 1, 2)))
    );
    let c = frobenius_recognize(&group("A(4)")).unwrap();
    assert_eq!(c.fpd(), Some((2, 2, 3)));
    assert!(frobenius_recognize(&group("D(8)")).is_none());

    let fo = |e: &str| {
        direct_decomposition(&group(e))
            .iter()
            .map(|s| s.order())
            .collect::<Vec<_>>()
    };
    assert_eq!(fo("C(6)"), vec![2, 3]);
    assert_eq!(fo("S(3)"), vec![6]);
    assert_eq!(fo("S(3) x C(3)"), vec![3, 6]);

    let v = ved_decomposition(&group("S(3) x C(3)")).unwrap();
    assert!(v.status.is_success() && v.quotient_order == 6);
    let v = ved_decomposition(&group("A(4)")).unwrap();
    assert!(v.status.is_success() && v.quotient_order == 12);
    assert!(!ved_decomposition(&group("S(4)"))
        .unwrap()
        .status
        .is_success());
    let v = ved_decomposition(&group("S(3) x A(4)")).unwrap();
    assert!(v.status.is_success() && v.coprime);

    let (m, g, _) = p("S(4)");
    assert!(!all_schmidt_subnormal(&g, &m));
    let (m, g, _) = p("S(3) x A(4)");
    assert!(all_schmidt_subnormal(&g, &m));
    let (m, g, _) = p("D(8)");
    assert!(all_schmidt_subnormal(&g, &m));
}
