//! Standard groups, products, Frobenius groups and the verification corpora.

use mnn::constructors::{cyclic_semidirect, direct_product, frobenius_fpd, GroupSpec};
use mnn::corpus::{corpus_generate, excluded_families, CorpusId};
use mnn::group::Caps;

fn main() -> mnn::error::Result<()> {
    for spec in [
        GroupSpec::Symmetric(4),
        GroupSpec::Dihedral(12),
        GroupSpec::Quaternion(8),
        GroupSpec::ElementaryAbelian { p: 3, k: 2 },
    ] {
        let g = spec.build()?;
        println!("{spec:<8} order {:>3} on {} points", g.order(), g.degree());
    }

    let s3 = GroupSpec::Symmetric(3).build()?;
    let a4 = GroupSpec::Alternating(4).build()?;
    let p = direct_product(&s3, &a4)?;
    println!(
        "S(3) x A(4): order {}, factors {} and {}",
        p.group.order(),
        p.left.order(),
        p.right.order()
    );

    println!(
        "C(7):C(3)@2 has order {}",
        cyclic_semidirect(7, 3, 2)?.order()
    );
    for (q, d) in [(2, 3), (5, 4), (3, 4), (2, 5)] {
        println!(
            "F({q},{d}) has order {}",
            frobenius_fpd(q, d, None)?.order()
        );
    }

    let caps = Caps::default();
    for id in [
        CorpusId::S4Subgroups,
        CorpusId::S5Subgroups,
        CorpusId::Families,
    ] {
        let entries = corpus_generate(id, &caps)?;
        let orders: Vec<usize> = entries.iter().map(|e| e.group.order()).collect();
        println!("{id}: {} groups, orders {orders:?}", entries.len());
    }
    for (label, order) in excluded_families(&caps) {
        println!("left out {label} (order {order})");
    }
    Ok(())
}
