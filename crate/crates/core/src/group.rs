//! Fully enumerated permutation groups and subgroup-level operators.
//!
//! A [`FiniteGroup`] stores every element, sorted lexicographically by image
//! sequence, so element handles are plain indices and the identity is always
//! index 0. A [`Subgroup`] is a bitset over those indices together with a
//! small generating set.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Handle of an element inside its [`FiniteGroup`].
pub type Elem = usize;

pub const DEFAULT_ELEMENT_CAP: usize = 10_000;
pub const DEFAULT_LATTICE_CAP: usize = 400;

/// Above this order products are computed by composing permutations instead
/// of a precomputed Cayley table.
const TABLE_LIMIT: usize = 2048;

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub elements: usize,
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: DEFAULT_ELEMENT_CAP,
            lattice: DEFAULT_LATTICE_CAP,
        }
    }
}

impl Caps {
    /// Defaults overridden by `MNN_ELEMENT_CAP` / `MNN_LATTICE_CAP`.
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        Caps {
            elements: read("MNN_ELEMENT_CAP", DEFAULT_ELEMENT_CAP),
            lattice: read("MNN_LATTICE_CAP", DEFAULT_LATTICE_CAP),
        }
    }

    pub fn check_lattice(&self, order: usize) -> Result<()> {
        if order > self.lattice {
            Err(Error::LatticeCapExceeded {
                order,
                cap: self.lattice,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    inverse: Vec<Elem>,
    gen_ids: Vec<Elem>,
    table: OnceLock<Option<Vec<u32>>>,
    orders: OnceLock<Vec<usize>>,
}

impl FiniteGroup {
    /// Closure of `gens` with the default element cap.
    pub fn generate(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_cap(degree, gens, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first closure of `gens` under right multiplication. Fails with
    /// [`Error::ElementCapExceeded`] as soon as more than `cap` elements are
    /// found.
    pub fn generate_with_cap(degree: usize, gens: Vec<Permutation>, cap: usize) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for g in &gens {
                let x = list[i].then(g);
                if !seen.contains_key(&x) {
                    seen.insert(x.clone(), ());
                    list.push(x);
                    if list.len() > cap {
                        return Err(Error::ElementCapExceeded { cap });
                    }
                }
            }
            i += 1;
        }
        Ok(Self::from_closed_set(degree, gens, list))
    }

    /// `elements` must already be closed under multiplication.
    fn from_closed_set(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<Permutation, Elem> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.invert()]).collect();
        let mut gen_ids: Vec<Elem> = generators
            .iter()
            .map(|g| index[g])
            .filter(|&i| i != 0)
            .collect();
        gen_ids.dedup();
        FiniteGroup {
            degree,
            generators,
            elements,
            index,
            inverse,
            gen_ids,
            table: OnceLock::new(),
            orders: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[Elem] {
        &self.gen_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, e: Elem) -> &Permutation {
        &self.elements[e]
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn ids(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                (n <= TABLE_LIMIT).then(|| {
                    let mut t = Vec::with_capacity(n * n);
                    for a in &self.elements {
                        for b in &self.elements {
                            t.push(self.index[&a.then(b)] as u32);
                        }
                    }
                    t
                })
            })
            .as_ref()
    }

    /// Product `a * b` (apply `a`, then `b`).
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.table() {
            Some(t) => t[a * self.order() + b] as Elem,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator_of(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, mut k: usize) -> Elem {
        let mut result = self.identity();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: Elem) -> usize {
        self.orders
            .get_or_init(|| self.elements.iter().map(|p| p.order()).collect())[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.subgroup_is_abelian(&self.whole())
    }

    /// π(G) computed from element orders.
    pub fn prime_spectrum(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = self
            .ids()
            .flat_map(|e| arith::prime_divisors(self.element_order(e) as u64))
            .collect();
        primes.sort_unstable();
        primes.dedup();
        primes
    }

    // ---- subgroups -------------------------------------------------------

    fn empty_bits(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = self.empty_bits();
        members.insert(0);
        Subgroup {
            members,
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = self.empty_bits();
        members.insert_range(..);
        Subgroup {
            members,
            order: self.order(),
            gens: self.gen_ids.clone(),
        }
    }

    /// Subgroup generated by the given element handles.
    pub fn closure(&self, seed: &[Elem]) -> Subgroup {
        let mut current = self.trivial_subgroup();
        for &s in seed {
            if !current.contains(s) {
                let mut gens = current.gens.clone();
                gens.push(s);
                current = self.closure_of_gens(gens);
            }
        }
        current
    }

    fn closure_of_gens(&self, gens: Vec<Elem>) -> Subgroup {
        let mut members = self.empty_bits();
        members.insert(0);
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            for &g in &gens {
                let x = self.mul(list[i], g);
                if !members.put(x) {
                    list.push(x);
                }
            }
            i += 1;
        }
        Subgroup {
            order: list.len(),
            members,
            gens,
        }
    }

    /// Smallest subgroup containing the given permutations.
    pub fn join_subgroup(&self, seed: &[Permutation]) -> Result<Subgroup> {
        let ids = seed
            .iter()
            .map(|p| self.index_of(p).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&ids))
    }

    /// Builds a subgroup from a member set already known to be closed.
    pub fn subgroup_from_members(&self, members: FixedBitSet) -> Subgroup {
        let mut current = self.trivial_subgroup();
        for e in members.ones() {
            if !current.contains(e) {
                let mut gens = current.gens.clone();
                gens.push(e);
                current = self.closure_of_gens(gens);
            }
        }
        debug_assert_eq!(current.members, members);
        current
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let mut gens = a.gens.clone();
        gens.extend(b.gens.iter().copied().filter(|&x| !a.contains(x)));
        self.closure_of_gens(gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut members = a.members.clone();
        members.intersect_with(&b.members);
        self.subgroup_from_members(members)
    }

    pub fn conjugate_subgroup(&self, s: &Subgroup, g: Elem) -> Subgroup {
        let mut members = self.empty_bits();
        for x in s.elements() {
            members.insert(self.conjugate(x, g));
        }
        Subgroup {
            members,
            order: s.order,
            gens: s.gens.iter().map(|&x| self.conjugate(x, g)).collect(),
        }
    }

    /// C_G(S).
    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        let members = self
            .ids()
            .filter(|&g| s.gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect::<FixedBitSet>();
        self.subgroup_from_members(grow(members, self.order()))
    }

    /// Z(G).
    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// N_G(S).
    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let members = self
            .ids()
            .filter(|&g| s.gens.iter().all(|&x| s.contains(self.conjugate(x, g))))
            .collect::<FixedBitSet>();
        self.subgroup_from_members(grow(members, self.order()))
    }

    /// Returns N_G(S) together with the flag `N_G(S) = G`.
    pub fn normalizer_normality(&self, s: &Subgroup) -> (Subgroup, bool) {
        let n = self.normalizer(s);
        let normal = n.order == self.order();
        (n, normal)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.is_normal_in(&self.whole(), s)
    }

    /// Whether `s` is normalized by every element of `ambient`.
    pub fn is_normal_in(&self, ambient: &Subgroup, s: &Subgroup) -> bool {
        ambient
            .gens
            .iter()
            .all(|&h| s.gens.iter().all(|&x| s.contains(self.conjugate(x, h))))
    }

    /// [A, B], the normal closure in ⟨A, B⟩ of the generator commutators.
    pub fn commutator(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let seed: Vec<Elem> = a
            .gens
            .iter()
            .flat_map(|&x| b.gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator_of(x, y))
            .collect();
        let ambient = self.join(a, b);
        self.normal_closure_in(&ambient, &self.closure(&seed))
    }

    pub fn derived_subgroup(&self, s: &Subgroup) -> Subgroup {
        self.commutator(s, s)
    }

    /// Smallest normal subgroup of G containing `s`.
    pub fn normal_closure(&self, s: &Subgroup) -> Subgroup {
        self.normal_closure_in(&self.whole(), s)
    }

    /// Smallest subgroup containing `s` and normalized by `ambient`.
    pub fn normal_closure_in(&self, ambient: &Subgroup, s: &Subgroup) -> Subgroup {
        let mut current = s.clone();
        'outer: loop {
            for &x in &current.gens {
                for &h in &ambient.gens {
                    let y = self.conjugate(x, h);
                    if !current.contains(y) {
                        let mut gens = current.gens.clone();
                        gens.push(y);
                        current = self.closure_of_gens(gens);
                        continue 'outer;
                    }
                }
            }
            return current;
        }
    }

    pub fn subgroup_is_abelian(&self, s: &Subgroup) -> bool {
        s.gens.iter().enumerate().all(|(i, &x)| {
            s.gens[i + 1..]
                .iter()
                .all(|&y| self.mul(x, y) == self.mul(y, x))
        })
    }

    pub fn is_cyclic(&self, s: &Subgroup) -> bool {
        s.elements().any(|e| self.element_order(e) == s.order)
    }

    /// Materializes a subgroup as a group in its own right, on the same points.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> FiniteGroup {
        let gens = s.gens.iter().map(|&g| self.elements[g].clone()).collect();
        let elements = s.elements().map(|e| self.elements[e].clone()).collect();
        FiniteGroup::from_closed_set(self.degree, gens, elements)
    }

    /// Transports a subgroup of `other` (same degree, `other ≤ self` as sets)
    /// into this group.
    pub fn transport(&self, other: &FiniteGroup, s: &Subgroup) -> Result<Subgroup> {
        let map = |e: Elem| self.index_of(other.element(e)).ok_or(Error::NotInGroup);
        let mut members = self.empty_bits();
        for e in s.elements() {
            members.insert(map(e)?);
        }
        Ok(Subgroup {
            members,
            order: s.order,
            gens: s.gens.iter().map(|&g| map(g)).collect::<Result<_>>()?,
        })
    }

    pub fn subgroup_permutations(&self, s: &Subgroup) -> Vec<Permutation> {
        s.elements().map(|e| self.elements[e].clone()).collect()
    }

    /// G/N realized as the action of G on the right cosets of N.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in self.ids() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for x in n.elements() {
                coset_of[self.mul(x, g)] = c;
            }
        }
        let index = reps.len();
        let gen_images: Vec<Permutation> = self
            .gen_ids
            .iter()
            .map(|&s| {
                let images = reps.iter().map(|&r| coset_of[self.mul(r, s)]).collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            })
            .collect();
        let group = FiniteGroup::generate_with_cap(index, gen_images.clone(), index.max(1))?;
        let q_gens: Vec<Elem> = gen_images
            .iter()
            .map(|p| group.index_of(p).expect("generator image in quotient"))
            .collect();

        let mut images = vec![usize::MAX; self.order()];
        images[0] = group.identity();
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            for (j, &s) in self.gen_ids.iter().enumerate() {
                let x = self.mul(e, s);
                if images[x] == usize::MAX {
                    images[x] = group.mul(images[e], q_gens[j]);
                    queue.push(x);
                }
            }
            i += 1;
        }
        Ok(Quotient {
            group,
            kernel: n.clone(),
            coset_of,
            projection: Homomorphism { images },
        })
    }
}

fn grow(mut bits: FixedBitSet, len: usize) -> FixedBitSet {
    bits.grow(len);
    bits
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// A subgroup of some [`FiniteGroup`], stored as a set of element handles.
///
/// Equality, hashing and ordering look only at the member set; the ordering
/// is by order first, then by the canonical member bitset.
#[derive(Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    gens: Vec<Elem>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.members.is_subset(&other.members)
    }

    pub fn meets_trivially(&self, other: &Subgroup) -> bool {
        self.members.intersection_count(&other.members) == 1
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order, self.gens)
    }
}

/// A group homomorphism given by the image of every source element.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    images: Vec<Elem>,
}

impl Homomorphism {
    pub fn image_of(&self, e: Elem) -> Elem {
        self.images[e]
    }

    pub fn generator_images(&self, source: &FiniteGroup) -> Vec<Elem> {
        source.gen_ids.iter().map(|&g| self.images[g]).collect()
    }
}

/// G/N as a concrete permutation group on the cosets of N, with projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub kernel: Subgroup,
    coset_of: Vec<usize>,
    pub projection: Homomorphism,
}

impl Quotient {
    pub fn coset_of(&self, e: Elem) -> usize {
        self.coset_of[e]
    }

    pub fn image(&self, s: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = s
            .gens
            .iter()
            .map(|&g| self.projection.image_of(g))
            .collect();
        self.group.closure(&gens)
    }

    /// Full preimage in `parent` of a subgroup of the quotient.
    pub fn preimage(&self, parent: &FiniteGroup, t: &Subgroup) -> Subgroup {
        let mut gens = self.kernel.gens.clone();
        for &q in &t.gens {
            let rep = parent
                .ids()
                .find(|&g| self.projection.image_of(g) == q)
                .expect("projection is onto");
            gens.push(rep);
        }
        parent.closure(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cs: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::generate(3, vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap()
    }

    fn d8() -> FiniteGroup {
        FiniteGroup::generate(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])]).unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..n).collect();
        FiniteGroup::generate(n, vec![perm(n, &[&c])]).unwrap()
    }

    #[test]
    fn generation_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(FiniteGroup::generate(4, vec![]).unwrap().order(), 1);
        let s5 = FiniteGroup::generate(5, vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])])
            .unwrap();
        assert_eq!(s5.order(), 120);
    }

    #[test]
    fn generation_respects_cap() {
        let gens = vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])];
        let err = FiniteGroup::generate_with_cap(5, gens, 100).unwrap_err();
        assert_eq!(err, Error::ElementCapExceeded { cap: 100 });
    }

    #[test]
    fn generation_rejects_degree_mismatch() {
        assert!(FiniteGroup::generate(3, vec![perm(4, &[&[0, 1]])]).is_err());
    }

    #[test]
    fn identity_is_first_and_inverses_work() {
        let g = s3();
        assert!(g.element(0).is_identity());
        for e in g.ids() {
            assert_eq!(g.mul(e, g.inv(e)), 0);
        }
    }

    #[test]
    fn joins() {
        let g = s3();
        let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(g.join_subgroup(&[]).unwrap().is_trivial());
        let all = g
            .join_subgroup(&[perm(3, &[&[0, 1]]), perm(3, &[&[1, 2]])])
            .unwrap();
        assert_eq!(all, g.whole());
        assert_eq!(
            g.join_subgroup(&[perm(4, &[&[0, 3]])]).unwrap_err(),
            Error::NotInGroup
        );
    }

    #[test]
    fn centers() {
        assert_eq!(s3().center().order(), 1);
        assert_eq!(d8().center().order(), 2);
        let c12 = cyclic(12);
        assert_eq!(c12.center(), c12.whole());
    }

    #[test]
    fn normalizers() {
        let g = s3();
        let t = g.join_subgroup(&[perm(3, &[&[0, 1]])]).unwrap();
        let (n, normal) = g.normalizer_normality(&t);
        assert_eq!((n.order(), normal), (2, false));
        let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
        let (n, normal) = g.normalizer_normality(&a3);
        assert_eq!((n.order(), normal), (6, true));
        assert_eq!(g.normalizer_normality(&g.whole()), (g.whole(), true));
    }

    #[test]
    fn commutators() {
        let g = s3();
        assert_eq!(g.derived_subgroup(&g.whole()).order(), 3);
        let c6 = cyclic(6);
        assert!(c6.derived_subgroup(&c6.whole()).is_trivial());
        let d = d8();
        assert_eq!(d.derived_subgroup(&d.whole()), d.center());
    }

    #[test]
    fn normal_closures() {
        let g = s3();
        let t = g.join_subgroup(&[perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(g.normal_closure(&t), g.whole());
        let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.normal_closure(&a3), a3);
        let d = d8();
        let refl = d.join_subgroup(&[perm(4, &[&[0, 2]])]).unwrap();
        let v = d.normal_closure(&refl);
        assert_eq!(v.order(), 4);
        assert!(v.elements().all(|e| d.element_order(e) <= 2));
    }

    #[test]
    fn quotients() {
        let g = s3();
        let a3 = g.join_subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.quotient(&a3).unwrap().group.order(), 2);
        assert_eq!(g.quotient(&g.whole()).unwrap().group.order(), 1);
        let t = g.join_subgroup(&[perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(g.quotient(&t).unwrap_err(), Error::NotNormal);

        let d = d8();
        let q = d.quotient(&d.center()).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.ids().all(|e| q.group.element_order(e) <= 2));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let d = d8();
        let q = d.quotient(&d.center()).unwrap();
        for a in d.ids() {
            for b in d.ids() {
                let lhs = q.projection.image_of(d.mul(a, b));
                let rhs = q
                    .group
                    .mul(q.projection.image_of(a), q.projection.image_of(b));
                assert_eq!(lhs, rhs);
            }
        }
        let pre = q.preimage(&d, &q.group.trivial_subgroup());
        assert_eq!(pre, d.center());
    }

    #[test]
    fn spectra() {
        assert_eq!(s3().prime_spectrum(), vec![2, 3]);
        assert!(cyclic(1).prime_spectrum().is_empty());
    }
}
