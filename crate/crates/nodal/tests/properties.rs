mod common;

use common::CASES;

#[test]
fn field_axioms() {
    common::field_axioms(CASES).unwrap();
}

#[test]
fn substitution_functoriality() {
    common::substitution_functoriality(CASES).unwrap();
}

#[test]
fn euler_identity_on_catalog_forms() {
    common::euler_identity(CASES).unwrap();
}

#[test]
fn s_pairs_of_emitted_bases_reduce_to_zero() {
    common::s_pair_reduction(CASES).unwrap();
}

#[test]
fn fingerprints_are_conjugation_invariant() {
    common::fingerprint_conjugation(CASES).unwrap();
}

#[test]
fn invariant_subspaces_are_witnessed() {
    common::invariant_subspace_witnesses(CASES).unwrap();
}
