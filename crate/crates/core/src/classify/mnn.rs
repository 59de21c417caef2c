use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::{self, SubgroupLattice};
use crate::series;

/// The non-nilpotent subgroups of a group and their minimal members.
#[derive(Debug, Clone)]
pub struct MnnProfile {
    /// |M(G)|; zero exactly when G is nilpotent.
    pub m: usize,
    /// All non-nilpotent subgroups, in lattice order (G last when present).
    pub members: Vec<Subgroup>,
    /// Inclusion-minimal members: the Schmidt subgroups of G.
    pub schmidt_subgroups: Vec<Subgroup>,
    /// The unique proper member when `m == 2`.
    pub k_subgroup: Option<Subgroup>,
}

/// Nilpotency of every lattice member, computed once per conjugacy class.
pub fn nilpotency_flags(g: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<bool> {
    let mut by_class: HashMap<usize, bool> = HashMap::new();
    (0..lattice.len())
        .map(|i| {
            let class = lattice.conjugacy_class_of(i);
            *by_class
                .entry(class)
                .or_insert_with(|| series::subgroup_is_nilpotent(g, &lattice.subgroups()[i]))
        })
        .collect()
}

impl MnnProfile {
    pub fn compute(g: &FiniteGroup, lattice: &SubgroupLattice) -> Self {
        let nilpotent = nilpotency_flags(g, lattice);
        let members: Vec<Subgroup> = lattice
            .subgroups()
            .iter()
            .zip(&nilpotent)
            .filter(|(_, &nil)| !nil)
            .map(|(s, _)| s.clone())
            .collect();
        let schmidt_subgroups = members
            .iter()
            .filter(|s| !members.iter().any(|t| t.is_proper_subgroup_of(s)))
            .cloned()
            .collect();
        let m = members.len();
        let k_subgroup = (m == 2).then(|| members[0].clone());
        MnnProfile {
            m,
            members,
            schmidt_subgroups,
            k_subgroup,
        }
    }

    pub fn member_orders(&self) -> Vec<usize> {
        self.members.iter().map(Subgroup::order).collect()
    }
}

pub fn mnn_profile(g: &FiniteGroup, lattice: &SubgroupLattice) -> MnnProfile {
    MnnProfile::compute(g, lattice)
}

/// Whether G is a Schmidt (minimal non-nilpotent) group, decided from the
/// maximal subgroups and cross-checked against `m == 1`.
pub fn is_schmidt(g: &FiniteGroup, lattice: &SubgroupLattice) -> Result<bool> {
    let by_maximal = !series::subgroup_is_nilpotent(g, lattice.whole())
        && lattice
            .maximal_subgroups()
            .all(|h| series::subgroup_is_nilpotent(g, h));
    let by_count = MnnProfile::compute(g, lattice).m == 1;
    if by_maximal != by_count {
        return Err(Error::OracleMismatch(format!(
            "maximal-subgroup Schmidt test says {by_maximal}, m = 1 test says {by_count}"
        )));
    }
    Ok(by_maximal)
}

/// (is_dedekind, is_t_group).
pub fn dedekind_tgroup(g: &FiniteGroup, lattice: &SubgroupLattice) -> (bool, bool) {
    let dedekind = (0..lattice.len()).all(|i| lattice.is_normal(i));
    let t_group = (0..lattice.len())
        .all(|i| lattice.is_normal(i) || !lattice::is_subnormal(g, &lattice.subgroups()[i]));
    (dedekind, t_group)
}

/// Whether every Schmidt subgroup of G is subnormal in G.
pub fn all_schmidt_subnormal(g: &FiniteGroup, profile: &MnnProfile) -> bool {
    profile
        .schmidt_subgroups
        .iter()
        .all(|s| lattice::is_subnormal(g, s))
}
