//! Brute-force oracles that work on explicit permutation sets, independent of
//! the indexed group machinery.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mnn::dsl::parse_expr;
use mnn::group::{FiniteGroup, Subgroup};
use mnn::perm::Permutation;

pub type PermSet = BTreeSet<Permutation>;

pub fn group(expr: &str) -> FiniteGroup {
    parse_expr(expr).unwrap().to_spec().build().unwrap()
}

pub fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

pub fn mul(a: &Permutation, b: &Permutation) -> Permutation {
    a.compose(b).unwrap()
}

/// Closure under multiplication by repeated products of known elements.
pub fn closure(degree: usize, gens: &[Permutation]) -> PermSet {
    let mut set: PermSet = [Permutation::identity(degree)].into_iter().collect();
    let mut frontier: Vec<Permutation> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn perms_of(g: &FiniteGroup, s: &Subgroup) -> PermSet {
    s.elements().map(|e| g.element(e).clone()).collect()
}

pub fn all_perms(g: &FiniteGroup) -> PermSet {
    g.elements().iter().cloned().collect()
}

pub fn center(elems: &PermSet) -> PermSet {
    elems
        .iter()
        .filter(|x| elems.iter().all(|y| mul(x, y) == mul(y, x)))
        .cloned()
        .collect()
}

pub fn conj(x: &Permutation, y: &Permutation) -> Permutation {
    mul(&mul(&y.invert(), x), y)
}

pub fn is_normal(ambient: &PermSet, s: &PermSet) -> bool {
    ambient
        .iter()
        .all(|y| s.iter().all(|x| s.contains(&conj(x, y))))
}

pub fn derived(degree: usize, elems: &PermSet) -> PermSet {
    let mut comms = Vec::new();
    for a in elems {
        for b in elems {
            comms.push(mul(&mul(&a.invert(), &b.invert()), &mul(a, b)));
        }
    }
    closure(degree, &comms)
}

/// Nilpotency via the lower central series computed on element sets.
pub fn is_nilpotent(degree: usize, elems: &PermSet) -> bool {
    let mut current = elems.clone();
    loop {
        let mut comms = Vec::new();
        for a in &current {
            for b in elems {
                comms.push(mul(&mul(&a.invert(), &b.invert()), &mul(a, b)));
            }
        }
        let next = closure(degree, &comms);
        if next.len() == 1 {
            return true;
        }
        if next == current {
            return false;
        }
        current = next;
    }
}

/// Every subgroup, as sets of element indices: closures of all pairs of
/// elements, then pairwise joins until nothing new appears.
pub fn all_subgroups(g: &FiniteGroup) -> BTreeSet<BTreeSet<usize>> {
    let close = |seed: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = seed.clone();
        set.insert(0);
        loop {
            let snapshot: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &snapshot {
                for &b in &snapshot {
                    set.insert(g.mul(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    };
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for a in g.ids() {
        for b in a..g.order() {
            found.insert(close(&[a, b].into_iter().collect()));
        }
    }
    loop {
        let list: Vec<BTreeSet<usize>> = found.iter().cloned().collect();
        let mut added = false;
        for (i, x) in list.iter().enumerate() {
            for y in &list[i + 1..] {
                if x.is_subset(y) || y.is_subset(x) {
                    continue;
                }
                let j = close(&x.union(y).copied().collect());
                added |= found.insert(j);
            }
        }
        if !added {
            return found;
        }
    }
}
