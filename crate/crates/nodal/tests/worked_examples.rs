//! Worked examples that cross module boundaries.

use nodal::arith::FieldElement;
use nodal::catalog::{catalog_build, compute_automorphism_group, Tag};
use nodal::group::{fixed_flats, identify, Fingerprint, GroupHandle, Perm};
use nodal::ideal::{proj_dim_degree, Budget, Ideal};
use nodal::linalg::Matrix;
use nodal::projective::{frame_map, general_position, plane_contained, preserves, LinearSubspace, ProjPoint, ProjTransform};
use nodal::singular::{classify_singularity, dual_degree_budget};

fn pt(v: &[i64]) -> ProjPoint {
    ProjPoint::from_ints(v).unwrap()
}

#[test]
fn j9b_equation_has_ten_terms_and_a_minus_three() {
    let e = catalog_build(Tag::J9b);
    let f = e.cubic().unwrap();
    assert_eq!(f.terms().len(), 10);
    assert!(f.terms().iter().any(|(_, c)| *c == FieldElement::from_int(-3)));
    assert!(f.terms().iter().all(|(_, c)| c.is_rational()));
}

#[test]
fn segre_jacobian_is_ten_reduced_points() {
    let e = catalog_build(Tag::J15);
    let f = e.cubic().unwrap();
    let (dim, deg) = proj_dim_degree(&Ideal::new(f.gradient()), &Budget::default()).unwrap();
    assert_eq!((dim, deg), (0, Some(10)));
    assert_eq!(e.seed_points.len(), 10);
    for p in &e.seed_points {
        assert!(f.gradient().iter().all(|g| g.evaluate(p.coords()).is_zero()));
    }
}

#[test]
fn standard_frame_maps_onto_six_segre_nodes() {
    let nodes = catalog_build(Tag::J15).seed_points;
    let six = itertools::Itertools::combinations(0..nodes.len(), 6)
        .map(|c| c.into_iter().map(|i| nodes[i].clone()).collect::<Vec<_>>())
        .find(|s| general_position(s).is_ok())
        .unwrap();
    check_frame(&six);
}

fn check_frame(dst: &[ProjPoint]) {
    let n = dst[0].len();
    let mut src: Vec<ProjPoint> = (0..n).map(|i| ProjPoint::coordinate(n, i)).collect();
    src.push(ProjPoint::new(vec![FieldElement::one(); n]).unwrap());
    let t = frame_map(&src, dst).unwrap();
    for (s, d) in src.iter().zip(dst) {
        assert_eq!(&t.apply(s), d);
    }
}

#[test]
fn shear_does_not_preserve_j5a() {
    let e = catalog_build(Tag::J5a);
    let f = e.cubic().unwrap();
    let shear = ProjTransform::new(Matrix::from_ints(&[
        &[1, 1, 0, 0, 0],
        &[0, 1, 0, 0, 0],
        &[0, 0, 1, 0, 0],
        &[0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 1],
    ]))
    .unwrap();
    assert!(!preserves(&shear, f));
    assert!(preserves(&ProjTransform::permutation(&[1, 0, 2, 3, 4]), f));
}

#[test]
fn coordinate_plane_is_not_on_j5a() {
    let e = catalog_build(Tag::J5a);
    let plane = LinearSubspace::span_points(&[pt(&[1, 0, 0, 0, 0]), pt(&[0, 1, 0, 0, 0]), pt(&[0, 0, 1, 0, 0])]);
    assert!(!plane_contained(&plane, e.cubic().unwrap()));
}

#[test]
fn nine_nodes_form_one_orbit_under_c3_squared() {
    let e = catalog_build(Tag::J14);
    let aut = compute_automorphism_group(e.cubic().unwrap(), &e.seed_points).unwrap();
    let c3sq = aut.group.subgroup_scan(|s| s.order() == 9);
    assert_eq!(c3sq.len(), 1);
    let h = aut.group.subgroup_handle(&c3sq[0]);
    let orbits = h.orbits_on(&e.seed_points, |t, p| t.apply(p)).unwrap();
    assert_eq!(orbits.len(), 1);
    assert_eq!(orbits[0].len(), 9);
}

#[test]
fn dih12_orbit_of_the_witness_point_has_three_points() {
    let e = catalog_build(Tag::FamilyJ9);
    let lift = |c: &str| nodal::catalog::lift_point_perm(&e.seed_points, &Perm::from_cycles(c, 6).unwrap()).unwrap();
    let g = GroupHandle::closure_with_identity(
        ProjTransform::identity(5),
        vec![lift("(1,2,3)(4,5,6)"), lift("(1,4)(2,6)(3,5)"), lift("(1,4,2,5,3,6)")],
    )
    .unwrap();
    assert_eq!(identify(&Fingerprint::of(&g)), Some("Dih12"));
    let mut pts: Vec<ProjPoint> = Vec::new();
    for t in g.elements() {
        let q = t.apply(&pt(&[1, -1, 0, -1, 1]));
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    assert_eq!(pts.len(), 3);
}

#[test]
fn sym5_on_j5a_fixes_only_the_all_ones_point() {
    let e = catalog_build(Tag::J5a);
    let f = e.cubic().unwrap();
    let aut = compute_automorphism_group(f, &e.seed_points).unwrap();
    let flats = fixed_flats(&aut.group).unwrap();
    let ones = pt(&[1, 1, 1, 1, 1]);
    assert_eq!(flats.fixed_points(), vec![ones.clone()]);
    assert!(flats.lines.is_empty());
    assert!(flats.planes.is_empty());
    assert!(!f.evaluate(ones.coords()).is_zero());
}

#[test]
fn j5a_dual_degree_budget_is_fourteen() {
    let e = catalog_build(Tag::J5a);
    let f = e.cubic().unwrap();
    let reports: Vec<_> =
        e.seed_points.iter().map(|p| classify_singularity(f, p, &Budget::default()).unwrap()).collect();
    assert_eq!(dual_degree_budget(&reports).value, 14);
}
