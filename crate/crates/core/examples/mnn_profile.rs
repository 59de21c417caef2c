//! The set M(G) of non-nilpotent subgroups and its minimal members.

use mnn::classify::{all_schmidt_subnormal, is_schmidt, MnnProfile};
use mnn::dsl::parse_expr;
use mnn::lattice::SubgroupLattice;

fn main() -> mnn::error::Result<()> {
    for expr in [
        "S(3)",
        "A(4)",
        "S(4)",
        "D(12)",
        "S(3) x C(3)",
        "S(3) x C(5)",
        "A(4) x C(5)",
        "C(24)",
    ] {
        let g = parse_expr(expr).unwrap().to_spec().build()?;
        let l = SubgroupLattice::build(&g)?;
        let p = MnnProfile::compute(&g, &l);
        let schmidt: Vec<usize> = p.schmidt_subgroups.iter().map(|s| s.order()).collect();
        println!(
            "{expr:<12} m = {:<2} orders {:?} schmidt {:?} K {:?} schmidt group {} all schmidt subnormal {}",
            p.m,
            p.member_orders(),
            schmidt,
            p.k_subgroup.as_ref().map(|k| k.order()),
            is_schmidt(&g, &l)?,
            all_schmidt_subnormal(&g, &p)
        );
    }
    Ok(())
}
