use num_integer::Integer;

use crate::arith;
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice;

/// For a prime q dividing the complement order: the multiplicative order of
/// p modulo q and whether it equals the kernel rank m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentCheck {
    pub q: usize,
    pub exponent: usize,
    pub matches_m: bool,
}

/// Kernel and complement of a Frobenius group, plus the (p, m, d) data when
/// the kernel is elementary abelian of order p^m and the complement cyclic of
/// order d.
#[derive(Debug, Clone)]
pub struct FrobeniusCertificate {
    pub kernel: Subgroup,
    pub complement: Subgroup,
    pub p: Option<usize>,
    pub m: Option<usize>,
    pub d: Option<usize>,
    pub exponent_checks: Vec<ExponentCheck>,
}

impl FrobeniusCertificate {
    pub fn fpd(&self) -> Option<(usize, usize, usize)> {
        Some((self.p?, self.m?, self.d?))
    }

    /// m equals the order of p modulo q for every prime q dividing d.
    pub fn exponents_match(&self) -> bool {
        self.fpd().is_some() && self.exponent_checks.iter().all(|c| c.matches_m)
    }

    /// Re-verifies the structural claims element by element.
    pub fn verify(&self, g: &FiniteGroup) -> bool {
        let (n, h) = (&self.kernel, &self.complement);
        g.is_normal(n)
            && n.meets_trivially(h)
            && n.order() * h.order() == g.order()
            && !n.is_trivial()
            && !h.is_trivial()
            && h.elements().filter(|&y| y != 0).all(|y| {
                n.elements()
                    .filter(|&x| x != 0)
                    .all(|x| g.conjugate(x, y) != x)
            })
    }
}

fn is_elementary_abelian(g: &FiniteGroup, s: &Subgroup) -> Option<(usize, usize)> {
    let p = arith::prime_power_base(s.order() as u64)? as usize;
    if !g.subgroup_is_abelian(s) || s.elements().any(|e| e != 0 && g.element_order(e) != p) {
        return None;
    }
    let mut m = 0;
    let mut size = 1;
    while size < s.order() {
        size *= p;
        m += 1;
    }
    Some((p, m))
}

/// Looks for a Frobenius kernel N (normal, coprime to its index, and
/// containing the centralizer of each of its non-identity elements) and a
/// complement for it.
pub fn frobenius_recognize(g: &FiniteGroup) -> Option<FrobeniusCertificate> {
    let normals = lattice::normal_subgroups(g);
    let kernel = normals.into_iter().find(|n| {
        !n.is_trivial()
            && n.order() < g.order()
            && n.order().gcd(&(g.order() / n.order())) == 1
            && n.elements()
                .filter(|&x| x != 0)
                .all(|x| g.ids().all(|y| n.contains(y) || g.mul(x, y) != g.mul(y, x)))
    })?;
    let index = g.order() / kernel.order();
    let complement = lattice::subgroups_with_order_dividing(g, index)
        .into_iter()
        .find(|h| h.order() == index)?;

    let mut cert = FrobeniusCertificate {
        kernel,
        complement,
        p: None,
        m: None,
        d: None,
        exponent_checks: Vec::new(),
    };
    debug_assert!(cert.verify(g));
    if let Some((p, m)) = is_elementary_abelian(g, &cert.kernel) {
        if g.is_cyclic(&cert.complement) {
            let d = cert.complement.order();
            cert.exponent_checks = arith::prime_divisors(d as u64)
                .into_iter()
                .map(|q| {
                    let exponent = arith::multiplicative_order(p as u64, q).unwrap() as usize;
                    ExponentCheck {
                        q: q as usize,
                        exponent,
                        matches_m: exponent == m,
                    }
                })
                .collect();
            cert.p = Some(p);
            cert.m = Some(m);
            cert.d = Some(d);
        }
    }
    Some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{frobenius_fpd, GroupSpec};

    #[test]
    fn s3_and_a4() {
        let s3 = GroupSpec::Symmetric(3).build().unwrap();
        let c = frobenius_recognize(&s3).unwrap();
        assert_eq!(c.fpd(), Some((3, 1, 2)));
        assert!(c.verify(&s3));

        let a4 = GroupSpec::Alternating(4).build().unwrap();
        let c = frobenius_recognize(&a4).unwrap();
        assert_eq!(c.fpd(), Some((2, 2, 3)));
        assert_eq!(
            c.exponent_checks,
            vec![ExponentCheck {
                q: 3,
                exponent: 2,
                matches_m: true
            }]
        );
    }

    #[test]
    fn non_frobenius() {
        assert!(frobenius_recognize(&GroupSpec::Dihedral(8).build().unwrap()).is_none());
        assert!(frobenius_recognize(&GroupSpec::Cyclic(6).build().unwrap()).is_none());
        assert!(frobenius_recognize(&GroupSpec::Symmetric(4).build().unwrap()).is_none());
    }

    #[test]
    fn constructed_frobenius_groups_are_recognized() {
        for (p, d, m) in [(7, 3, 1), (5, 4, 1), (2, 5, 4), (3, 4, 2), (5, 6, 2)] {
            let g = frobenius_fpd(p, d, None).unwrap();
            let c = frobenius_recognize(&g).unwrap();
            assert_eq!(c.fpd(), Some((p, m, d)));
            assert!(c.verify(&g));
        }
    }

    #[test]
    fn exponent_check_can_disagree() {
        // kernel 3^2, complement C4: 3 has order 1 modulo 2
        let g = frobenius_fpd(3, 4, None).unwrap();
        let c = frobenius_recognize(&g).unwrap();
        assert_eq!(
            c.exponent_checks,
            vec![ExponentCheck {
                q: 2,
                exponent: 1,
                matches_m: false
            }]
        );
        assert!(!c.exponents_match());
    }

    #[test]
    fn non_cyclic_complement_has_no_fpd() {
        // 3^2 ⋊ Q8, with Q8 ≤ SL(2,3) acting on the vectors (a, b) ↦ a + 3b
        let affine = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
            let images = (0..9)
                .map(|v| {
                    let (a, b) = f(v % 3, v / 3);
                    a % 3 + 3 * (b % 3)
                })
                .collect();
            crate::perm::Permutation::from_images(images).unwrap()
        };
        let gens = vec![
            affine(&|a, b| (a + 1, b)),
            affine(&|a, b| (a, b + 1)),
            affine(&|a, b| (2 * b, a)),
            affine(&|a, b| (a + b, a + 2 * b)),
        ];
        let g = FiniteGroup::generate(9, gens).unwrap();
        assert_eq!(g.order(), 72);
        let c = frobenius_recognize(&g).unwrap();
        assert!(c.verify(&g));
        assert_eq!((c.kernel.order(), c.complement.order()), (9, 8));
        assert!(!g.is_cyclic(&c.complement));
        assert_eq!(c.fpd(), None);
    }
}
