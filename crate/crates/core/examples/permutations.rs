//! Permutation algebra and fully enumerated groups.

use mnn::group::FiniteGroup;
use mnn::perm::Permutation;

fn main() -> mnn::error::Result<()> {
    let r = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]])?;
    let s = Permutation::from_cycles(4, &[vec![0, 2]])?;
    println!(
        "r = {r}, s = {s}, r*s = {}, r^-1 = {}",
        r.compose(&s)?,
        r.invert()
    );

    let d8 = FiniteGroup::generate(4, vec![r.clone(), s])?;
    println!("|<r, s>| = {}", d8.order());

    let z = d8.center();
    let rot = d8.join_subgroup(&[r])?;
    println!(
        "|Z| = {}, |<r>| = {}, <r> normal: {}",
        z.order(),
        rot.order(),
        d8.is_normal(&rot)
    );

    let q = d8.quotient(&z)?;
    let exponent = q
        .group
        .ids()
        .map(|e| q.group.element_order(e))
        .max()
        .unwrap();
    println!("|G/Z| = {}, exponent {exponent}", q.group.order());
    println!(
        "[G, G] has order {}",
        d8.derived_subgroup(&d8.whole()).order()
    );
    Ok(())
}
