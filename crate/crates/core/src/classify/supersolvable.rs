use crate::arith;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::SubgroupLattice;

#[derive(Debug, Clone)]
pub struct SupersolvableVerdict {
    pub supersolvable: bool,
    /// 1 = N_0 < N_1 < … with every N_i normal in G and prime indices. On
    /// failure, the longest such chain found.
    pub chain: Vec<Subgroup>,
}

/// Extends a normal series one prime step at a time: from N, look for
/// x ∉ N such that ⟨N, x⟩ is normal in G with prime index over N.
pub fn greedy_prime_chain(g: &FiniteGroup) -> SupersolvableVerdict {
    let mut chain = vec![g.trivial_subgroup()];
    loop {
        let current = chain.last().unwrap();
        if current.order() == g.order() {
            return SupersolvableVerdict {
                supersolvable: true,
                chain,
            };
        }
        let next = g.ids().filter(|&x| !current.contains(x)).find_map(|x| {
            let m = g.join(current, &g.closure(&[x]));
            let index = (m.order() / current.order()) as u64;
            (arith::is_prime(index) && g.is_normal(&m)).then_some(m)
        });
        match next {
            Some(m) => chain.push(m),
            None => {
                return SupersolvableVerdict {
                    supersolvable: false,
                    chain,
                }
            }
        }
    }
}

/// Huppert's criterion: every maximal subgroup has prime index.
pub fn huppert_criterion(g: &FiniteGroup, lattice: &SubgroupLattice) -> bool {
    lattice
        .maximal_subgroups()
        .all(|h| arith::is_prime((g.order() / h.order()) as u64))
}

/// Supersolvability by the greedy prime chain, cross-checked against
/// Huppert's criterion.
pub fn is_supersolvable(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
) -> Result<SupersolvableVerdict> {
    let verdict = greedy_prime_chain(g);
    let huppert = huppert_criterion(g, lattice);
    if verdict.supersolvable != huppert {
        return Err(Error::OracleMismatch(format!(
            "greedy chain says supersolvable = {}, Huppert criterion says {huppert}",
            verdict.supersolvable
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{direct_product, GroupSpec};

    fn check(g: &FiniteGroup) -> SupersolvableVerdict {
        is_supersolvable(g, &SubgroupLattice::build(g).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let s3 = GroupSpec::Symmetric(3).build().unwrap();
        let v = check(&s3);
        assert!(v.supersolvable);
        assert_eq!(
            v.chain.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![1, 3, 6]
        );

        let a4 = GroupSpec::Alternating(4).build().unwrap();
        assert!(!check(&a4).supersolvable);

        let g = direct_product(&s3, &GroupSpec::Cyclic(3).build().unwrap()).unwrap();
        assert!(check(&g.group).supersolvable);

        assert!(check(&GroupSpec::Cyclic(1).build().unwrap()).supersolvable);
        assert!(!check(&GroupSpec::Symmetric(4).build().unwrap()).supersolvable);
    }
}
