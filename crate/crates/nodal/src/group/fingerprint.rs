use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{perm_group, GroupElement, GroupHandle, Perm};

/// Isomorphism invariants of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub abelianization: Vec<usize>,
    pub center_order: usize,
    pub derived_series: Vec<usize>,
}

fn derived_subgroup<E: GroupElement>(g: &GroupHandle<E>, h: &FixedBitSet) -> FixedBitSet {
    let elems: Vec<usize> = h.ones().collect();
    let mut comms: Vec<usize> = Vec::new();
    let mut seen = FixedBitSet::with_capacity(g.order());
    for &a in &elems {
        let ai = g.inv(a);
        for &b in &elems {
            let c = g.mul(g.mul(ai, g.inv(b)), g.mul(a, b));
            if !seen.put(c) && c != 0 {
                comms.push(c);
            }
        }
    }
    g.subgroup_closure(&comms)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of G/N for abelian G/N, from counts of p-power torsion.
fn abelian_invariants<E: GroupElement>(g: &GroupHandle<E>, n: &FixedBitSet) -> Vec<usize> {
    let nsize = n.count_ones(..);
    let q = g.order() / nsize;
    if q == 1 {
        return Vec::new();
    }
    let qorder: Vec<usize> = (0..g.order())
        .map(|x| {
            let mut y = x;
            let mut k = 1;
            while !n.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            k
        })
        .collect();
    let mut per_prime: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_factors(q) {
        let mut exps: Vec<u32> = Vec::new();
        let mut prev_log = 0u32;
        let mut pk = 1usize;
        loop {
            pk *= p;
            let cnt = qorder.iter().filter(|&&o| pk.is_multiple_of(o)).count() / nsize;
            let log = (cnt as f64).log(p as f64).round() as u32;
            let at_least = log - prev_log;
            if at_least == 0 {
                break;
            }
            exps.push(at_least);
            prev_log = log;
        }
        // exps[k] = number of cyclic factors of order ≥ p^{k+1}
        let ncyc = exps[0] as usize;
        let mut sizes = vec![0u32; ncyc];
        for (k, &c) in exps.iter().enumerate() {
            for s in sizes.iter_mut().take(c as usize) {
                *s = k as u32 + 1;
            }
        }
        per_prime.push((p, sizes));
    }
    let len = per_prime.iter().map(|(_, s)| s.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; len];
    for (p, sizes) in &per_prime {
        for (j, &e) in sizes.iter().enumerate() {
            factors[len - 1 - j] *= p.pow(e);
        }
    }
    debug_assert!(factors.windows(2).all(|w| w[1] % w[0] == 0));
    factors
}

impl Fingerprint {
    pub fn of<E: GroupElement>(g: &GroupHandle<E>) -> Fingerprint {
        let n = g.order();
        let mut order_histogram = BTreeMap::new();
        for a in 0..n {
            *order_histogram.entry(g.element_order(a)).or_insert(0) += 1;
        }
        let gens = g.generator_indices();
        let center_order = (0..n).filter(|&z| gens.iter().all(|&s| g.mul(z, s) == g.mul(s, z))).count();
        let mut whole = FixedBitSet::with_capacity(n);
        whole.insert_range(..);
        let mut derived_series = vec![n];
        let mut cur = whole.clone();
        loop {
            let d = derived_subgroup(g, &cur);
            let k = d.count_ones(..);
            if k == *derived_series.last().unwrap() {
                break;
            }
            derived_series.push(k);
            cur = d;
        }
        let gp = derived_subgroup(g, &whole);
        let abelianization = abelian_invariants(g, &gp);
        Fingerprint { order: n, order_histogram, abelianization, center_order, derived_series }
    }
}

/// Named permutation groups whose fingerprints identify computed groups.
pub fn reference_groups() -> Vec<(&'static str, GroupHandle<Perm>)> {
    vec![
        ("Sym6", perm_group(6, &["(1,2)", "(1,2,3,4,5,6)"])),
        ("Alt6", perm_group(6, &["(1,2,3)", "(2,3,4,5,6)"])),
        ("Sym5", perm_group(5, &["(1,2)", "(1,2,3,4,5)"])),
        ("Alt5", perm_group(5, &["(1,2,3)", "(1,2,3,4,5)"])),
        ("Sym3^2:C2", perm_group(6, &["(1,2)", "(1,2,3)", "(1,4)(2,5)(3,6)"])),
        ("Sym3^2", perm_group(6, &["(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"])),
        ("C3^2:C4", perm_group(6, &["(1,2,3)", "(4,5,6)", "(1,5,2,4)(3,6)"])),
        ("C5:C4", perm_group(5, &["(1,2,3,4,5)", "(2,3,5,4)"])),
        ("Dih12", perm_group(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"])),
        ("Sym4xC2", perm_group(6, &["(1,2)", "(1,2,3,4)", "(5,6)"])),
        ("Sym4", perm_group(4, &["(1,2)", "(1,2,3,4)"])),
        ("Dih10", perm_group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"])),
        ("Sym3xC3", perm_group(6, &["(1,2)", "(1,2,3)", "(4,5,6)"])),
        ("Sym3", perm_group(3, &["(1,2)", "(1,2,3)"])),
        ("C6", perm_group(6, &["(1,2,3,4,5,6)"])),
    ]
}

/// Name of the reference group with this fingerprint, if any.
pub fn identify(fp: &Fingerprint) -> Option<&'static str> {
    reference_groups().into_iter().find(|(_, g)| g.order() == fp.order && Fingerprint::of(g) == *fp).map(|(n, _)| n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_distinctions() {
        let c6 = Fingerprint::of(&perm_group(6, &["(1,2,3,4,5,6)"]));
        let s3 = Fingerprint::of(&perm_group(3, &["(1,2)", "(1,2,3)"]));
        assert_eq!(c6.order, s3.order);
        assert_ne!(c6.order_histogram, s3.order_histogram);
        assert_eq!(c6.abelianization, vec![6]);
        assert_eq!(s3.abelianization, vec![2]);
    }

    #[test]
    fn alt5_is_perfect() {
        let a5 = Fingerprint::of(&perm_group(5, &["(1,2,3)", "(1,2,3,4,5)"]));
        assert_eq!(a5.order, 60);
        assert_eq!(a5.order_histogram.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 5]);
        assert!(a5.abelianization.is_empty());
        assert_eq!(a5.derived_series, vec![60]);
    }

    #[test]
    fn references_are_pairwise_distinct() {
        let refs = reference_groups();
        let fps: Vec<Fingerprint> = refs.iter().map(|(_, g)| Fingerprint::of(g)).collect();
        let orders = [720, 360, 120, 60, 72, 36, 36, 20, 12, 48, 24, 10, 18, 6, 6];
        for (i, (name, g)) in refs.iter().enumerate() {
            assert_eq!(g.order(), orders[i], "{name}");
            for j in 0..i {
                assert_ne!(fps[i], fps[j], "{} vs {}", name, refs[j].0);
            }
        }
    }

    #[test]
    fn abelianizations() {
        let wreath = Fingerprint::of(&perm_group(6, &["(1,2)", "(1,2,3)", "(1,4)(2,5)(3,6)"]));
        assert_eq!(wreath.abelianization, vec![2, 2]);
        let f20 = Fingerprint::of(&perm_group(5, &["(1,2,3,4,5)", "(2,3,5,4)"]));
        assert_eq!(f20.abelianization, vec![4]);
        let c3c4 = Fingerprint::of(&perm_group(6, &["(1,2,3)", "(4,5,6)", "(1,5,2,4)(3,6)"]));
        assert_eq!(c3c4.abelianization, vec![4]);
        let s4c2 = Fingerprint::of(&perm_group(6, &["(1,2)", "(1,2,3,4)", "(5,6)"]));
        assert_eq!(s4c2.abelianization, vec![2, 2]);
        assert_eq!(s4c2.center_order, 2);
    }
}
