use num_integer::Integer;

use crate::classify::frobenius::{frobenius_recognize, FrobeniusCertificate};
use crate::error::Result;
use crate::group::{FiniteGroup, Quotient, Subgroup};
use crate::lattice;
use crate::series::SeriesProfile;

/// Internal direct decomposition into indecomposable factors, sorted by
/// (order, canonical member set). An indecomposable group yields `[G]`.
pub fn direct_decomposition(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut out = Vec::new();
    split_into(g, g.whole(), &mut out);
    out.sort();
    out
}

fn split_into(g: &FiniteGroup, factor: Subgroup, out: &mut Vec<Subgroup>) {
    if factor.order() == 1 {
        out.push(factor);
        return;
    }
    let fg = g.subgroup_as_group(&factor);
    let normals: Vec<Subgroup> = lattice::normal_subgroups(&fg)
        .into_iter()
        .filter(|n| !n.is_trivial() && n.order() < fg.order())
        .collect();
    let split = normals.iter().find_map(|n| {
        normals
            .iter()
            .find(|m| n.order() * m.order() == fg.order() && n.meets_trivially(m))
            .map(|m| (n, m))
    });
    match split {
        Some((n, m)) => {
            let n = g.transport(&fg, n).expect("factor elements live in g");
            let m = g.transport(&fg, m).expect("factor elements live in g");
            split_into(g, n, out);
            split_into(g, m, out);
        }
        None => out.push(factor),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VedStatus {
    Success,
    Fail(String),
}

impl VedStatus {
    pub fn is_success(&self) -> bool {
        matches!(self, VedStatus::Success)
    }
}

/// One direct factor of G/Z_∞(G) and its Frobenius certificate, which is
/// expressed in the factor viewed as a group on its own.
#[derive(Debug, Clone)]
pub struct VedFactor {
    pub subgroup: Subgroup,
    pub group: FiniteGroup,
    pub certificate: Option<FrobeniusCertificate>,
}

impl VedFactor {
    /// Frobenius with elementary abelian kernel p^m, cyclic complement of
    /// order d, and m equal to the order of p modulo every prime q | d.
    pub fn is_fpd(&self) -> bool {
        self.certificate
            .as_ref()
            .is_some_and(FrobeniusCertificate::exponents_match)
    }

    pub fn fpd(&self) -> Option<(usize, usize, usize)> {
        self.certificate.as_ref()?.fpd()
    }
}

/// The decomposition of G/Z_∞(G) into F(p, d) direct factors.
#[derive(Debug, Clone)]
pub struct VedCertificate {
    pub quotient_order: usize,
    pub quotient: Quotient,
    pub factors: Vec<VedFactor>,
    /// Complement orders of the certified factors are pairwise coprime.
    pub coprime: bool,
    pub status: VedStatus,
}

impl VedCertificate {
    /// Factors pairwise commute and meet trivially, generate the quotient,
    /// and their orders multiply to its order.
    pub fn verify(&self) -> bool {
        let q = &self.quotient.group;
        let fs = &self.factors;
        let pairwise = fs.iter().enumerate().all(|(i, a)| {
            fs[i + 1..].iter().all(|b| {
                a.subgroup.meets_trivially(&b.subgroup)
                    && a.subgroup
                        .elements()
                        .all(|x| b.subgroup.elements().all(|y| q.mul(x, y) == q.mul(y, x)))
            })
        });
        let generated = fs
            .iter()
            .fold(q.trivial_subgroup(), |acc, f| q.join(&acc, &f.subgroup));
        let product: usize = fs.iter().map(|f| f.subgroup.order()).product();
        pairwise && generated == q.whole() && product == q.order()
    }
}

pub fn ved_decomposition(g: &FiniteGroup) -> Result<VedCertificate> {
    let profile = SeriesProfile::compute(g)?;
    let quotient = g.quotient(profile.hypercenter())?;
    let quotient_order = quotient.group.order();
    if quotient_order == 1 {
        return Ok(VedCertificate {
            quotient_order,
            quotient,
            factors: Vec::new(),
            coprime: true,
            status: VedStatus::Fail("nilpotent: quotient trivial".into()),
        });
    }
    let q = &quotient.group;
    let factors: Vec<VedFactor> = direct_decomposition(q)
        .into_iter()
        .map(|subgroup| {
            let group = q.subgroup_as_group(&subgroup);
            let certificate = frobenius_recognize(&group);
            VedFactor {
                subgroup,
                group,
                certificate,
            }
        })
        .collect();

    let ds: Vec<usize> = factors
        .iter()
        .filter_map(|f| f.fpd().map(|t| t.2))
        .collect();
    let coprime = ds
        .iter()
        .enumerate()
        .all(|(i, a)| ds[i + 1..].iter().all(|b| a.gcd(b) == 1));

    let mut status = VedStatus::Success;
    for (i, f) in factors.iter().enumerate() {
        let reason = match &f.certificate {
            None => Some("is not a Frobenius group".to_string()),
            Some(c) if c.fpd().is_none() => {
                Some("has a non-elementary-abelian kernel or a non-cyclic complement".to_string())
            }
            Some(c) if !c.exponents_match() => {
                let bad: Vec<String> = c
                    .exponent_checks
                    .iter()
                    .filter(|e| !e.matches_m)
                    .map(|e| format!("ord({} mod {}) = {}", c.p.unwrap(), e.q, e.exponent))
                    .collect();
                Some(format!("has m = {} but {}", c.m.unwrap(), bad.join(", ")))
            }
            Some(_) => None,
        };
        if let Some(reason) = reason {
            status = VedStatus::Fail(format!(
                "factor {i} (order {}) {reason}",
                f.subgroup.order()
            ));
            break;
        }
    }
    if status.is_success() && !coprime {
        status = VedStatus::Fail(format!("complement orders {ds:?} are not pairwise coprime"));
    }
    Ok(VedCertificate {
        quotient_order,
        quotient,
        factors,
        coprime,
        status,
    })
}
