//! Supersolvability: greedy prime chain against Huppert's criterion.

use mnn::classify::{greedy_prime_chain, huppert_criterion, MnnProfile};
use mnn::dsl::parse_expr;
use mnn::lattice::SubgroupLattice;

fn main() -> mnn::error::Result<()> {
    for expr in [
        "S(3)",
        "S(3) x C(3)",
        "D(12)",
        "A(4)",
        "S(4)",
        "A(4) x C(5)",
        "F(5,4)",
    ] {
        let g = parse_expr(expr).unwrap().to_spec().build()?;
        let l = SubgroupLattice::build(&g)?;
        let v = greedy_prime_chain(&g);
        let chain: Vec<usize> = v.chain.iter().map(|s| s.order()).collect();
        let m = MnnProfile::compute(&g, &l).m;
        println!(
            "{expr:<12} m = {m:<2} supersolvable {:<5} huppert {:<5} chain {chain:?}",
            v.supersolvable,
            huppert_criterion(&g, &l)
        );
    }
    Ok(())
}
