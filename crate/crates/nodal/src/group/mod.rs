//! Finite groups by full enumeration: permutation groups and projective matrix groups.

mod fingerprint;
mod meataxe;
mod perm;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::projective::ProjTransform;

pub use fingerprint::{identify, reference_groups, Fingerprint};
pub use meataxe::{
    decompose, fixed_flats, invariant_subspaces, FixedFlats, InvariantSubspaces, IsotypicComponent,
    ModuleStructure,
};
pub use perm::Perm;

/// Largest group order accepted by [`GroupHandle::closure`].
pub const ORDER_BOUND: usize = 10_000;

/// Largest order for which a full Cayley table is cached.
const TABLE_BOUND: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("no generators given")]
    NoGenerators,
    #[error("group order exceeds the bound {0}")]
    OrderBound(usize),
    #[error("eigenvalue outside the supported cyclotomic range")]
    EigenvalueOutsideTower,
    #[error("module does not split over the supported fields")]
    NonSplit,
}

pub trait GroupElement: Clone + Eq + Hash + Debug {
    /// self ∘ other.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
}

impl GroupElement for Perm {
    fn compose(&self, other: &Self) -> Self {
        Perm::compose(self, other)
    }
    fn inverse(&self) -> Self {
        Perm::inverse(self)
    }
    fn identity_like(&self) -> Self {
        Perm::identity(self.degree())
    }
}

impl GroupElement for ProjTransform {
    fn compose(&self, other: &Self) -> Self {
        ProjTransform::compose(self, other)
    }
    fn inverse(&self) -> Self {
        ProjTransform::inverse(self)
    }
    fn identity_like(&self) -> Self {
        ProjTransform::identity(self.dim())
    }
}

/// A finite group stored as its full element list in breadth-first order.
#[derive(Debug)]
pub struct GroupHandle<E: GroupElement> {
    generators: Vec<E>,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    parent: Vec<(usize, usize)>,
    right: Vec<Vec<u32>>,
    table: OnceLock<Vec<u16>>,
}

impl<E: GroupElement> Clone for GroupHandle<E> {
    fn clone(&self) -> Self {
        GroupHandle {
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            parent: self.parent.clone(),
            right: self.right.clone(),
            table: OnceLock::new(),
        }
    }
}

/// A subgroup given by the element indices of an ambient [`GroupHandle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: FixedBitSet,
    pub generators: Vec<usize>,
    pub class_size: usize,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.count_ones(..)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.contains(i)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.elements.ones().collect()
    }
}

impl<E: GroupElement> GroupHandle<E> {
    /// Closure of the generators by breadth-first right multiplication.
    pub fn closure(generators: Vec<E>) -> Result<Self, GroupError> {
        let first = generators.first().ok_or(GroupError::NoGenerators)?;
        Self::closure_with_identity(first.identity_like(), generators)
    }

    pub fn closure_with_identity(identity: E, generators: Vec<E>) -> Result<Self, GroupError> {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut parent = vec![(0usize, usize::MAX)];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];
        let mut head = 0;
        while head < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let p = elements[head].compose(g);
                let k = match index.get(&p) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        if k >= ORDER_BOUND {
                            return Err(GroupError::OrderBound(ORDER_BOUND));
                        }
                        index.insert(p.clone(), k);
                        elements.push(p);
                        parent.push((head, s));
                        k
                    }
                };
                right[s].push(k as u32);
            }
            head += 1;
        }
        Ok(GroupHandle { generators, elements, index, parent, right, table: OnceLock::new() })
    }

    pub fn trivial(identity: E) -> Self {
        Self::closure_with_identity(identity, Vec::new()).unwrap()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    /// Indices of the generators inside the element list.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    fn table(&self) -> Option<&[u16]> {
        let n = self.order();
        if n > TABLE_BOUND {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let mut t = vec![0u16; n * n];
            for a in 0..n {
                t[a * n] = a as u16;
                for x in 1..n {
                    let (p, s) = self.parent[x];
                    t[a * n + x] = self.right[s][t[a * n + p] as usize] as u16;
                }
            }
            t
        }))
    }

    /// Index of elements[a] ∘ elements[b].
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        match self.table() {
            Some(t) => {
                let n = self.order();
                (0..n).find(|&b| t[a * n + b] == 0).unwrap()
            }
            None => self.index[&self.elements[a].inverse()],
        }
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_closure(&self, gens: &[usize]) -> FixedBitSet {
        self.extend_closure(&[0], gens)
    }

    fn extend_closure(&self, start: &[usize], gens: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in start {
            if !set.put(s) {
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn conjugate_set(&self, set: &FixedBitSet, x: usize) -> FixedBitSet {
        let xi = self.inv(x);
        let mut out = FixedBitSet::with_capacity(self.order());
        for h in set.ones() {
            out.insert(self.mul(self.mul(x, h), xi));
        }
        out
    }

    pub fn subgroup_handle(&self, sub: &Subgroup) -> GroupHandle<E> {
        let identity = self.elements[0].clone();
        let gens = sub.generators.iter().map(|&i| self.elements[i].clone()).collect();
        GroupHandle::closure_with_identity(identity, gens).unwrap()
    }

    /// Permutation induced on `items` (up to equality), if the group permutes them.
    pub fn action_images<T: PartialEq>(&self, e: &E, items: &[T], act: impl Fn(&E, &T) -> T) -> Option<Perm> {
        let images: Option<Vec<usize>> = items
            .iter()
            .map(|x| {
                let y = act(e, x);
                items.iter().position(|z| *z == y)
            })
            .collect();
        Perm::from_images(images?)
    }

    /// Orbits of the generated action on `items`; None if some generator does not permute them.
    pub fn orbits_on<T: PartialEq>(&self, items: &[T], act: impl Fn(&E, &T) -> T) -> Option<Vec<Vec<usize>>> {
        let perms: Option<Vec<Perm>> = self.generators.iter().map(|g| self.action_images(g, items, &act)).collect();
        Some(orbits_of_perms(&perms?, items.len()))
    }

    /// Conjugacy classes of subgroups, optionally filtered, with a Lagrange check on each.
    pub fn subgroup_scan(&self, predicate: impl Fn(&Subgroup) -> bool) -> Vec<Subgroup> {
        let n = self.order();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut classes: Vec<Subgroup> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let trivial = self.subgroup_closure(&[]);
        let register = |set: FixedBitSet, gens: Vec<usize>, classes: &mut Vec<Subgroup>, seen: &mut HashSet<FixedBitSet>| {
            let mut conj: HashSet<FixedBitSet> = HashSet::new();
            for x in 0..n {
                conj.insert(self.conjugate_set(&set, x));
            }
            let class_size = conj.len();
            seen.extend(conj);
            classes.push(Subgroup { elements: set, generators: gens, class_size });
        };
        register(trivial, Vec::new(), &mut classes, &mut seen);
        queue.push_back(0);
        while let Some(c) = queue.pop_front() {
            let base = classes[c].clone();
            let start: Vec<usize> = base.elements.ones().collect();
            for g in 0..n {
                if base.elements.contains(g) {
                    continue;
                }
                let mut gens = base.generators.clone();
                gens.push(g);
                let set = self.extend_closure(&start, &gens);
                if seen.contains(&set) {
                    continue;
                }
                register(set, gens, &mut classes, &mut seen);
                queue.push_back(classes.len() - 1);
            }
        }
        for s in &classes {
            assert_eq!(n % s.order(), 0, "subgroup order does not divide group order");
        }
        classes.into_iter().filter(|s| predicate(s)).collect()
    }
}

/// Orbit partition of {0, …, n−1} under the group generated by `perms`.
pub fn orbits_of_perms(perms: &[Perm], n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for p in perms {
                let y = p.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn is_transitive(orbits: &[Vec<usize>]) -> bool {
    orbits.len() <= 1
}

/// Permutation group from 1-indexed cycle strings.
pub fn perm_group(degree: usize, gens: &[&str]) -> GroupHandle<Perm> {
    let gens: Vec<Perm> = gens.iter().map(|g| Perm::from_cycles(g, degree).expect("bad cycle")).collect();
    GroupHandle::closure_with_identity(Perm::identity(degree), gens).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders() {
        assert_eq!(perm_group(6, &["(1,2)", "(1,2,3,4,5,6)"]).order(), 720);
        let h = perm_group(6, &["(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"]);
        assert_eq!(h.order(), 6);
        let d = perm_group(6, &["(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)", "(1,4,2,5,3,6)"]);
        assert_eq!(d.order(), 12);
    }

    #[test]
    fn cayley_table_matches_composition() {
        let g = perm_group(4, &["(1,2)", "(1,2,3,4)"]);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let c = g.element(a).compose(g.element(b));
                assert_eq!(g.mul(a, b), g.index_of(&c).unwrap());
            }
            assert!(g.element(g.mul(a, g.inv(a))).is_identity());
        }
    }

    #[test]
    fn trivial_orbits() {
        let t = GroupHandle::trivial(Perm::identity(5));
        let o = orbits_of_perms(t.generators(), 5);
        assert_eq!(o.len(), 5);
    }

    #[test]
    fn subgroups_of_sym3() {
        let g = perm_group(3, &["(1,2)", "(1,2,3)"]);
        let all = g.subgroup_scan(|_| true);
        let mut sig: Vec<(usize, usize)> = all.iter().map(|s| (s.order(), s.class_size)).collect();
        sig.sort();
        assert_eq!(sig, vec![(1, 1), (2, 3), (3, 1), (6, 1)]);
    }

    #[test]
    fn index_two_subgroups_of_wreath_product() {
        let g = perm_group(6, &["(1,2)", "(1,2,3)", "(1,4)(2,5)(3,6)"]);
        assert_eq!(g.order(), 72);
        let idx2 = g.subgroup_scan(|s| s.order() == 36);
        assert_eq!(idx2.iter().map(|s| s.class_size).sum::<usize>(), 3);
    }

    #[test]
    fn sylow_normalizer_in_sym6() {
        let g = perm_group(6, &["(1,2)", "(1,2,3,4,5,6)"]);
        let found = g.subgroup_scan(|s| s.order() == 72);
        assert!(!found.is_empty());
        // a unique subgroup of order 9 means H normalizes a Sylow 3-subgroup
        assert!(found.iter().any(|s| {
            let h = g.subgroup_handle(s);
            let threes = s.indices().iter().filter(|&&x| 3 % g.element_order(x) == 0).count();
            is_transitive(&orbits_of_perms(h.generators(), 6)) && threes == 9
        }));
    }
}
