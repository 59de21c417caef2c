//! Subgroup lattice enumeration, subnormality and the Wielandt subgroup.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::Result;
use crate::group::{Caps, FiniteGroup, Subgroup};
use crate::series;

/// Every subgroup of a group, with normality, maximality and conjugacy data.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    position: HashMap<Subgroup, usize>,
    normal: Vec<bool>,
    maximal: Vec<bool>,
    minimal_normal: Vec<bool>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

/// Index sets into [`SubgroupLattice::subgroups`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFilters {
    pub maximal: Vec<usize>,
    pub normal: Vec<usize>,
    pub minimal_normal: Vec<usize>,
}

fn cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for e in g.ids() {
        let c = g.closure(&[e]);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// Closes `seeds` under pairwise joins with the atoms.
fn layered_joins(
    g: &FiniteGroup,
    atoms: &[Subgroup],
    keep: impl Fn(&Subgroup) -> bool,
) -> Vec<Subgroup> {
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut frontier = Vec::new();
    let trivial = g.trivial_subgroup();
    seen.insert(trivial.clone());
    frontier.push(trivial);
    for a in atoms.iter().filter(|a| keep(a)) {
        if seen.insert(a.clone()) {
            frontier.push(a.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in atoms {
                if c.is_subgroup_of(h) {
                    continue;
                }
                let j = g.join(h, c);
                if keep(&j) && !seen.contains(&j) {
                    seen.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort();
    out
}

impl SubgroupLattice {
    pub fn build(g: &FiniteGroup) -> Result<Self> {
        Self::build_with_caps(g, &Caps::default())
    }

    /// Layered-join enumeration: start from the cyclic subgroups and join
    /// with cyclic subgroups until no new subgroup appears.
    pub fn build_with_caps(g: &FiniteGroup, caps: &Caps) -> Result<Self> {
        caps.check_lattice(g.order())?;
        let atoms = cyclic_subgroups(g);
        let subgroups = layered_joins(g, &atoms, |_| true);
        Ok(Self::annotate(g, subgroups))
    }

    fn annotate(g: &FiniteGroup, subgroups: Vec<Subgroup>) -> Self {
        let position: HashMap<Subgroup, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let n = subgroups.len();

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut orbit = vec![i];
            class_of[i] = c;
            let mut k = 0;
            while k < orbit.len() {
                let h = &subgroups[orbit[k]];
                for &x in g.generator_ids() {
                    let j = position[&g.conjugate_subgroup(h, x)];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }

        let normal: Vec<bool> = (0..n).map(|i| classes[class_of[i]].len() == 1).collect();
        let top = n - 1;
        let maximal: Vec<bool> = (0..n)
            .map(|i| {
                i != top
                    && !subgroups[i + 1..top]
                        .iter()
                        .any(|k| subgroups[i].is_proper_subgroup_of(k))
            })
            .collect();
        let minimal_normal: Vec<bool> = (0..n)
            .map(|i| {
                normal[i]
                    && !subgroups[i].is_trivial()
                    && !(1..i)
                        .any(|j| normal[j] && subgroups[j].is_proper_subgroup_of(&subgroups[i]))
            })
            .collect();

        SubgroupLattice {
            subgroups,
            position,
            normal,
            maximal,
            minimal_normal,
            class_of,
            classes,
        }
    }

    /// Subgroups sorted by (order, canonical member set); index 0 is the
    /// trivial subgroup and the last index is the whole group.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().unwrap()
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        self.position.get(s).copied()
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn is_minimal_normal(&self, i: usize) -> bool {
        self.minimal_normal[i]
    }

    pub fn conjugacy_class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Conjugacy classes of subgroups, as index lists in lattice order.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn filters(&self) -> LatticeFilters {
        let pick = |flags: &[bool]| (0..self.len()).filter(|&i| flags[i]).collect();
        LatticeFilters {
            maximal: pick(&self.maximal),
            normal: pick(&self.normal),
            minimal_normal: pick(&self.minimal_normal),
        }
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.indices_where(&self.maximal)
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.indices_where(&self.normal)
    }

    fn indices_where<'a>(&'a self, flags: &'a [bool]) -> impl Iterator<Item = &'a Subgroup> {
        self.subgroups
            .iter()
            .zip(flags)
            .filter(|(_, &f)| f)
            .map(|(s, _)| s)
    }

    /// Maximal normal subgroups: proper normal subgroups contained in no
    /// larger proper normal subgroup.
    pub fn maximal_normal_subgroups(&self) -> Vec<&Subgroup> {
        let top = self.len() - 1;
        let normal: Vec<usize> = (0..top).filter(|&i| self.normal[i]).collect();
        normal
            .iter()
            .filter(|&&i| {
                !normal
                    .iter()
                    .any(|&j| self.subgroups[i].is_proper_subgroup_of(&self.subgroups[j]))
            })
            .map(|&i| &self.subgroups[i])
            .collect()
    }

    /// Covering pairs `(lower, upper)` of the inclusion order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for upper in 0..n {
            let below: Vec<usize> = (0..upper)
                .filter(|&i| self.subgroups[i].is_proper_subgroup_of(&self.subgroups[upper]))
                .collect();
            for &lower in &below {
                let covered = !below
                    .iter()
                    .any(|&mid| self.subgroups[lower].is_proper_subgroup_of(&self.subgroups[mid]));
                if covered {
                    out.push((lower, upper));
                }
            }
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram; non-nilpotent subgroups are
    /// drawn filled.
    pub fn to_dot(&self, g: &FiniteGroup) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, s) in self.subgroups.iter().enumerate() {
            let nilpotent = series::subgroup_is_nilpotent(g, s);
            let style = if nilpotent {
                ""
            } else {
                ", style=filled, fillcolor=\"#f4a6a6\""
            };
            let _ = writeln!(
                out,
                "  n{i} [label=\"#{i} |H|={}\", nilpotent={nilpotent}{style}];",
                s.order()
            );
        }
        for (lower, upper) in self.covers() {
            let _ = writeln!(out, "  n{lower} -> n{upper};");
        }
        out.push_str("}\n");
        out
    }
}

/// All normal subgroups, enumerated as joins of normal closures of single
/// elements. Needs no lattice, so it also works above the lattice cap.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut atoms = Vec::new();
    for e in g.ids() {
        let n = g.normal_closure(&g.closure(&[e]));
        if seen.insert(n.clone()) {
            atoms.push(n);
        }
    }
    atoms.sort();
    layered_joins(g, &atoms, |_| true)
}

/// All subgroups whose order divides `bound`, built from cyclic subgroups of
/// such order.
pub fn subgroups_with_order_dividing(g: &FiniteGroup, bound: usize) -> Vec<Subgroup> {
    let atoms: Vec<Subgroup> = cyclic_subgroups(g)
        .into_iter()
        .filter(|c| bound.is_multiple_of(c.order()))
        .collect();
    layered_joins(g, &atoms, |s| bound.is_multiple_of(s.order()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubnormalReport {
    pub subgroup: Subgroup,
    pub subnormal: bool,
    /// Length of the chain of iterated normal closures, when subnormal.
    pub defect: Option<usize>,
}

/// Iterates H_0 = G, H_{i+1} = normal closure of S in H_i.
pub fn subnormal_defect(g: &FiniteGroup, s: &Subgroup) -> SubnormalReport {
    let mut current = g.whole();
    let mut steps = 0;
    while current != *s {
        let next = g.normal_closure_in(&current, s);
        if next == current {
            return SubnormalReport {
                subgroup: s.clone(),
                subnormal: false,
                defect: None,
            };
        }
        current = next;
        steps += 1;
    }
    SubnormalReport {
        subgroup: s.clone(),
        subnormal: true,
        defect: Some(steps),
    }
}

pub fn is_subnormal(g: &FiniteGroup, s: &Subgroup) -> bool {
    subnormal_defect(g, s).subnormal
}

/// (ω(G), norm(G)): the intersections of the normalizers of all subnormal
/// subgroups and of all subgroups respectively.
pub fn wielandt_and_norm(g: &FiniteGroup, lattice: &SubgroupLattice) -> (Subgroup, Subgroup) {
    let mut wielandt = g.whole();
    let mut norm = g.whole();
    for s in lattice.subgroups() {
        let n = g.normalizer(s);
        if is_subnormal(g, s) {
            wielandt = g.intersection(&wielandt, &n);
        }
        norm = g.intersection(&norm, &n);
    }
    (wielandt, norm)
}
