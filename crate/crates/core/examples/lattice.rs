//! Subgroup lattice, conjugacy classes, subnormality and a DOT export.
//!
//! `cargo run --example lattice -- "D(8)" d8.dot`

use mnn::dsl::parse_expr;
use mnn::lattice::{subnormal_defect, wielandt_and_norm, SubgroupLattice};

fn main() -> mnn::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let expr = args.next().unwrap_or_else(|| "S(4)".into());
    let g = parse_expr(&expr).unwrap().to_spec().build()?;
    let l = SubgroupLattice::build(&g)?;
    println!(
        "{expr}: {} subgroups, {} classes",
        l.len(),
        l.conjugacy_classes().len()
    );

    for class in l.conjugacy_classes() {
        let i = class[0];
        let s = &l.subgroups()[i];
        let r = subnormal_defect(&g, s);
        println!(
            "  order {:>3} x{:<2} normal {:<5} maximal {:<5} subnormal defect {:?}",
            s.order(),
            class.len(),
            l.is_normal(i),
            l.is_maximal(i),
            r.defect
        );
    }
    let (omega, norm) = wielandt_and_norm(&g, &l);
    println!("|omega| = {}, |norm| = {}", omega.order(), norm.order());

    if let Some(path) = args.next() {
        std::fs::write(&path, l.to_dot(&g)).expect("write DOT file");
        println!("wrote {path}");
    }
    Ok(())
}
