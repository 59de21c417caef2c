//! Derived, lower central and upper central series, with the nilpotency and
//! solvability predicates built on them.

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// G ≥ G' ≥ G'' ≥ … until the series stabilizes (last term repeated once
/// is not stored).
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    descending(g, g.whole(), |g, _, h| g.derived_subgroup(h))
}

/// γ_1 = G ≥ γ_2 = [G, G] ≥ … with γ_{i+1} = [G, γ_i].
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    descending(g, g.whole(), |g, top, h| g.commutator(top, h))
}

/// Lower central series of a subgroup, computed inside its parent.
pub fn subgroup_lower_central_series(g: &FiniteGroup, s: &Subgroup) -> Vec<Subgroup> {
    descending(g, s.clone(), |g, top, h| g.commutator(top, h))
}

pub fn subgroup_derived_series(g: &FiniteGroup, s: &Subgroup) -> Vec<Subgroup> {
    descending(g, s.clone(), |g, _, h| g.derived_subgroup(h))
}

fn descending(
    g: &FiniteGroup,
    top: Subgroup,
    step: impl Fn(&FiniteGroup, &Subgroup, &Subgroup) -> Subgroup,
) -> Vec<Subgroup> {
    let mut out = vec![top.clone()];
    loop {
        let next = step(g, &top, out.last().unwrap());
        if next == *out.last().unwrap() {
            return out;
        }
        out.push(next);
    }
}

/// 1 = Z_0 ≤ Z_1 ≤ … where Z_{i+1} is the preimage of Z(G/Z_i).
pub fn upper_central_series(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let mut out = vec![g.trivial_subgroup()];
    loop {
        let current = out.last().unwrap();
        let q = g.quotient(current)?;
        let next = q.preimage(g, &q.group.center());
        if next == *current {
            return Ok(out);
        }
        out.push(next);
    }
}

/// Whether a subgroup is nilpotent, via its lower central series.
pub fn subgroup_is_nilpotent(g: &FiniteGroup, s: &Subgroup) -> bool {
    subgroup_lower_central_series(g, s)
        .last()
        .is_some_and(Subgroup::is_trivial)
}

pub fn subgroup_is_solvable(g: &FiniteGroup, s: &Subgroup) -> bool {
    subgroup_derived_series(g, s)
        .last()
        .is_some_and(Subgroup::is_trivial)
}

#[derive(Debug, Clone)]
pub struct SeriesProfile {
    pub derived_series: Vec<Subgroup>,
    pub lower_central: Vec<Subgroup>,
    pub upper_central: Vec<Subgroup>,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
}

impl SeriesProfile {
    pub fn compute(g: &FiniteGroup) -> Result<Self> {
        let derived_series = derived_series(g);
        let lower_central = lower_central_series(g);
        let upper_central = upper_central_series(g)?;
        let derived_length = derived_series
            .last()
            .unwrap()
            .is_trivial()
            .then(|| derived_series.len() - 1);
        let nilpotency_class = lower_central
            .last()
            .unwrap()
            .is_trivial()
            .then(|| lower_central.len() - 1);
        Ok(SeriesProfile {
            derived_series,
            lower_central,
            upper_central,
            nilpotency_class,
            derived_length,
        })
    }

    /// γ_∞, the stable term of the lower central series.
    pub fn gamma_infinity(&self) -> &Subgroup {
        self.lower_central.last().unwrap()
    }

    /// Z_∞, the hypercenter.
    pub fn hypercenter(&self) -> &Subgroup {
        self.upper_central.last().unwrap()
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        self.derived_series
            .get(1)
            .unwrap_or(&self.derived_series[0])
    }

    /// Z_i, saturating at Z_∞.
    pub fn center_term(&self, i: usize) -> &Subgroup {
        self.upper_central
            .get(i)
            .unwrap_or_else(|| self.hypercenter())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length.is_some()
    }
}

/// A Sylow p-subgroup, grown one factor of p at a time inside normalizers.
/// Returns the trivial subgroup when p does not divide |G|.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = arith::p_part(g.order() as u64, p) as usize;
    let mut current = g.trivial_subgroup();
    while current.order() < target {
        let n = g.normalizer(&current);
        let step = n
            .elements()
            .find(|&x| !current.contains(x) && current.contains(g.pow(x, p as usize)))
            .expect("N(P)/P has order divisible by p while P is not Sylow");
        current = g.join(&current, &g.closure(&[step]));
    }
    current
}

/// (is_nilpotent, is_solvable). Nilpotency is decided by the lower central
/// series and cross-checked against normality of all Sylow subgroups.
pub fn nilpotent_solvable(g: &FiniteGroup) -> Result<(bool, bool)> {
    let lcs = lower_central_series(g);
    let nilpotent = lcs.last().unwrap().is_trivial();
    let sylow_normal = arith::prime_divisors(g.order() as u64)
        .into_iter()
        .all(|p| g.is_normal(&sylow_subgroup(g, p)));
    if nilpotent != sylow_normal {
        return Err(Error::OracleMismatch(format!(
            "lower central series says nilpotent = {nilpotent}, Sylow test says {sylow_normal}"
        )));
    }
    let solvable = derived_series(g).last().unwrap().is_trivial();
    Ok((nilpotent, solvable))
}
