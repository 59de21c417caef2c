//! Derived, lower central and upper central series.

use mnn::dsl::parse_expr;
use mnn::series::{nilpotent_solvable, sylow_subgroup, SeriesProfile};

fn orders(v: &[mnn::group::Subgroup]) -> Vec<usize> {
    v.iter().map(|s| s.order()).collect()
}

fn main() -> mnn::error::Result<()> {
    for expr in ["S(4)", "D(8)", "S(3) x C(3)", "Q(8) x S(3)", "A(5)"] {
        let g = parse_expr(expr).unwrap().to_spec().build()?;
        let s = SeriesProfile::compute(&g)?;
        let (nil, sol) = nilpotent_solvable(&g)?;
        println!("{expr}");
        println!("  derived       {:?}", orders(&s.derived_series));
        println!("  lower central {:?}", orders(&s.lower_central));
        println!("  upper central {:?}", orders(&s.upper_central));
        println!(
            "  class {:?}, derived length {:?}, nilpotent {nil}, solvable {sol}",
            s.nilpotency_class, s.derived_length
        );
        let sylows: Vec<(u64, usize)> = g
            .prime_spectrum()
            .into_iter()
            .map(|p| (p, sylow_subgroup(&g, p).order()))
            .collect();
        println!("  sylow {sylows:?}");
    }
    Ok(())
}
