//! Property suites shared by the `properties` and `acceptance` targets.

#![allow(dead_code)]

use nodal::arith::FieldElement;
use nodal::catalog::{catalog_build, compute_automorphism_group, Tag};
use nodal::group::{invariant_subspaces, Fingerprint, GroupHandle, Perm};
use nodal::ideal::{audit_start, audit_take, groebner, Budget, Ideal};
use nodal::linalg::Matrix;
use nodal::poly::{Monomial, MultiPoly};
use nodal::projective::{LinearSubspace, ProjPoint, ProjTransform};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

pub const SEED: u64 = 0x6e6f_6461_6c5f_3331;
pub const CASES: u32 = 256;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() })
}

fn rational() -> impl Strategy<Value = FieldElement> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| FieldElement::frac(n, d))
}

/// Σ cₖ ζₙᵏ with small rational cₖ, n among the conductors the catalog uses.
pub fn field_element() -> impl Strategy<Value = FieldElement> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 15]), prop::collection::vec(rational(), 1..5)).prop_map(|(n, cs)| {
        cs.iter()
            .enumerate()
            .fold(FieldElement::zero(), |acc, (k, c)| &acc + &(c * &FieldElement::root_of_unity(n, k as i64)))
    })
}

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)
        .prop_map(|rows| Matrix::new(rows.into_iter().map(|r| r.into_iter().map(FieldElement::from_int).collect()).collect()))
}

/// Polynomials in five variables of degree at most 3.
fn small_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u16..=1, n), 0u16..=2, 0..n, -5i64..=5), 0..6).prop_map(move |ts| {
        MultiPoly::from_terms(
            n,
            ts.into_iter().map(|(mut e, extra, at, c)| {
                e[at] += extra;
                while e.iter().map(|&x| x as u32).sum::<u32>() > 3 {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                (Monomial::from_exps(&e), FieldElement::from_int(c))
            }),
        )
    })
}

fn int_vector(n: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    prop::collection::vec((-7i64..=7).prop_map(FieldElement::from_int), n)
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(field_element(), field_element(), field_element(), 1i64..15), |(a, b, c, j)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), FieldElement::zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            // automorphisms of Q(ζ60) respect both operations
            if j % 2 != 0 && j % 3 != 0 && j % 5 != 0 {
                prop_assert_eq!((&a * &b).galois(j), &a.galois(j) * &b.galois(j));
                prop_assert_eq!((&a + &b).galois(j), &a.galois(j) + &b.galois(j));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn substitution_functoriality(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(small_poly(5), int_matrix(5), int_matrix(5), int_vector(5)), |(f, a, b, v)| {
            let fa = f.substitute_matrix(&a).unwrap();
            prop_assert_eq!(fa.evaluate(&v), f.evaluate(&a.mul_vec(&v)));
            prop_assert_eq!(fa.substitute_matrix(&b).unwrap(), f.substitute_matrix(&a.mul(&b)).unwrap());
            prop_assert_eq!(f.substitute_matrix(&Matrix::identity(5)).unwrap(), f.clone());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Every catalog cubic, with families specialized at the given values.
pub fn catalog_cubics(values: &[i64]) -> Vec<(Tag, MultiPoly)> {
    Tag::ALL
        .iter()
        .map(|&t| {
            let e = catalog_build(t);
            let p: Vec<FieldElement> = (0..e.form.nparams()).map(|k| FieldElement::from_int(values[k % values.len()])).collect();
            (t, e.form.specialize(&p))
        })
        .collect()
}

pub fn euler_identity(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(prop::collection::vec(-4i64..=4, 8), int_vector(6)), |(params, v)| {
            for (tag, f) in catalog_cubics(&params) {
                let n = f.nvars();
                let v = &v[..n];
                let euler = f
                    .gradient()
                    .iter()
                    .zip(v)
                    .fold(FieldElement::zero(), |acc, (g, x)| &acc + &(&g.evaluate(v) * x));
                prop_assert_eq!(euler, &FieldElement::from_int(3) * &f.evaluate(v), "{}", tag);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn s_pair_reduction(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&prop::collection::vec(small_poly(3), 1..4), |gens| {
            let gens: Vec<MultiPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            if gens.is_empty() {
                return Ok(());
            }
            audit_start();
            let g = groebner(&Ideal::new(gens.clone()), &Budget::default());
            let emitted = audit_take();
            let Ok(g) = g else { return Ok(()) };
            prop_assert!(!emitted.is_empty());
            for b in &emitted {
                prop_assert!(b.check_s_pairs());
                prop_assert!(b.check_reduced());
            }
            for p in &gens {
                prop_assert!(g.contains(p));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Every basis computed while running `f` has all S-pairs reducing to zero.
pub fn audited<T>(f: impl FnOnce() -> T) -> (T, usize, bool) {
    audit_start();
    let out = f();
    let bases = audit_take();
    let ok = bases.iter().all(|b| b.check_s_pairs() && b.check_reduced());
    (out, bases.len(), ok)
}

fn perm6() -> impl Strategy<Value = Perm> {
    Just((0..6).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

pub fn fingerprint_conjugation(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(prop::collection::vec(perm6(), 1..3), perm6()), |(gens, x)| {
            let g = GroupHandle::closure_with_identity(Perm::identity(6), gens.clone()).unwrap();
            let xi = x.inverse();
            let conj: Vec<Perm> = gens.iter().map(|p| x.compose(p).compose(&xi)).collect();
            let h = GroupHandle::closure_with_identity(Perm::identity(6), conj).unwrap();
            prop_assert_eq!(Fingerprint::of(&g), Fingerprint::of(&h));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn j5a_group() -> GroupHandle<ProjTransform> {
    let e = catalog_build(Tag::J5a);
    compute_automorphism_group(e.cubic().unwrap(), &e.seed_points).unwrap().group
}

fn orbit_span(g: &GroupHandle<ProjTransform>, p: &ProjPoint) -> LinearSubspace {
    let pts: Vec<ProjPoint> = g.elements().iter().map(|t| t.apply(p)).collect();
    LinearSubspace::span_points(&pts)
}

/// Subgroups of Aut(J5a): every reported subspace is invariant, and the span
/// of any orbit of dimension 2 or 3 is reported.
pub fn invariant_subspace_witnesses(cases: u32) -> Result<(), String> {
    let aut = j5a_group();
    let n = aut.order();
    runner(cases)
        .run(&(prop::collection::vec(0..n, 1..3), int_vector(5)), |(idx, v)| {
            let g = GroupHandle::closure_with_identity(
                ProjTransform::identity(5),
                idx.iter().map(|&i| aut.element(i).clone()).collect(),
            )
            .unwrap();
            for d in [2, 3] {
                let r = invariant_subspaces(&g, d).map_err(|e| TestCaseError::fail(e.to_string()))?;
                for s in r.subspaces() {
                    prop_assert_eq!(s.linear_dim(), d);
                    prop_assert!(g.generators().iter().all(|t| s.is_invariant(t)));
                }
                if let Ok(p) = ProjPoint::new(v.clone()) {
                    let span = orbit_span(&g, &p);
                    if span.linear_dim() == d && !r.is_infinite() {
                        prop_assert!(r.subspaces().contains(&span), "orbit span {} missing", span);
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub const PROPERTY_SUITES: [(&str, fn(u32) -> Result<(), String>); 6] = [
    ("field axioms", field_axioms),
    ("substitution functoriality", substitution_functoriality),
    ("Euler identity on catalog forms", euler_identity),
    ("S-pair reduction of emitted bases", s_pair_reduction),
    ("fingerprint conjugation invariance", fingerprint_conjugation),
    ("invariant-subspace witnesses", invariant_subspace_witnesses),
];
