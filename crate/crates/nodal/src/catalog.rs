//! The nodal cubic threefolds of the classification, as data.
//!
//! Six rows are concrete cubics; three entries are parametric families used
//! by the symbolic checks. Expected invariants `r`, `p`, `type₁`, `type₂`
//! are recorded here and never recomputed.
//!
//! [`compute_automorphism_group`] finds Aut(X) exactly. With at least six
//! singular points it fixes one base frame among them and tries every
//! ordered frame of singular points as a target; with five points in general
//! position it lifts each of the 120 permutations through the diagonal torus.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::arith::FieldElement;
use crate::group::{GroupError, GroupHandle, Perm};
use crate::linalg::Matrix;
use crate::parse::{parse_poly, ParseContext};
use crate::poly::{MultiPoly, ParamForm};
use crate::projective::{
    diagonal_lifts, frame_matrix, general_position, preserves, LinearSubspace, ProjError, ProjPoint, ProjTransform,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tag {
    J15,
    J14,
    J9a,
    J9b,
    J5a,
    J5b,
    FamilyJ11,
    FamilyJ9,
    FamilyFourNode,
}

impl Tag {
    /// The six rows of the classification table.
    pub const ROWS: [Tag; 6] = [Tag::J15, Tag::J14, Tag::J9a, Tag::J9b, Tag::J5a, Tag::J5b];
    pub const ALL: [Tag; 9] = [
        Tag::J15,
        Tag::J14,
        Tag::J9a,
        Tag::J9b,
        Tag::J5a,
        Tag::J5b,
        Tag::FamilyJ11,
        Tag::FamilyJ9,
        Tag::FamilyFourNode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tag::J15 => "J15",
            Tag::J14 => "J14",
            Tag::J9a => "J9a",
            Tag::J9b => "J9b",
            Tag::J5a => "J5a",
            Tag::J5b => "J5b",
            Tag::FamilyJ11 => "F-J11",
            Tag::FamilyJ9 => "F-J9",
            Tag::FamilyFourNode => "F-4NODE",
        }
    }

    pub fn is_family(self) -> bool {
        matches!(self, Tag::FamilyJ11 | Tag::FamilyJ9 | Tag::FamilyFourNode)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CatalogError::UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown variety tag {0:?}")]
    UnknownTag(String),
    #[error("relation has zero coefficient on the eliminated variable")]
    ZeroPivot,
    #[error("expected a form in {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("no frame of singular points: need six points with a general-position 6-subset, or five in general position")]
    NoFrame,
    #[error("{0} is a parametric family")]
    Parametric(Tag),
    #[error("generator {0} is not an automorphism of the variety")]
    NotAnAutomorphism(String),
    #[error("lifts found do not form a group: {found} lifts, closure of order {closure}")]
    NotClosed { found: usize, closure: usize },
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Invariants a row is expected to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    /// Number of singular points.
    pub s: usize,
    /// Number of planes on X.
    pub p: usize,
    /// Rank of the class group.
    pub r: usize,
    pub type1: &'static str,
    pub type2: &'static str,
    pub aut_order: usize,
    pub fingerprint: &'static str,
}

/// How the generators of a listed subgroup are written down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generators {
    /// Permutations of the six coordinates of the model in P⁵ cut by x₀+…+x₅ = 0.
    Sextic(Vec<Perm>),
    /// Permutations of the singular points in catalog order.
    Points(Vec<Perm>),
    /// The whole automorphism group.
    Whole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGroup {
    pub name: &'static str,
    pub fingerprint: &'static str,
    pub generators: Generators,
    /// Whether the group is claimed to act transitively on the singular points.
    pub transitive: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub tag: Tag,
    pub form: ParamForm,
    /// Conductor of the base field ℚ(ζₘ); 1 means ℚ.
    pub conductor: u32,
    pub presentation: &'static str,
    /// Relations among the parameters.
    pub relations: Vec<MultiPoly>,
    /// Product of the parameters assumed nonzero.
    pub nonvanishing: Option<MultiPoly>,
    pub expected: Option<Expected>,
    pub minimal_groups: Vec<MinimalGroup>,
    pub seed_planes: Vec<LinearSubspace>,
    pub seed_points: Vec<ProjPoint>,
}

impl CatalogEntry {
    /// The defining cubic of a concrete row.
    pub fn cubic(&self) -> Result<&MultiPoly, CatalogError> {
        if self.form.nparams() == 0 {
            Ok(&self.form.poly)
        } else {
            Err(CatalogError::Parametric(self.tag))
        }
    }
}

fn poly(text: &str, n: usize, conductor: u32) -> MultiPoly {
    parse_poly(text, &ParseContext::coords(n, conductor)).expect("catalog polynomial parses")
}

fn param_form(text: &str, ncoords: usize, params: &[&str]) -> ParamForm {
    let mut names = crate::poly::default_names(ncoords);
    names.extend(params.iter().map(|s| s.to_string()));
    let p = parse_poly(text, &ParseContext::with_names(names, 1)).expect("catalog family parses");
    ParamForm::new(p, ncoords, params.iter().map(|s| s.to_string()).collect())
}

fn param_poly(text: &str, params: &[&str]) -> MultiPoly {
    let names = params.iter().map(|s| s.to_string()).collect();
    parse_poly(text, &ParseContext::with_names(names, 1)).expect("parameter polynomial parses")
}

fn pt(v: &[i64]) -> ProjPoint {
    ProjPoint::from_ints(v).unwrap()
}

fn perms(degree: usize, cycles: &[&str]) -> Vec<Perm> {
    cycles.iter().map(|c| Perm::from_cycles(c, degree).expect("catalog cycle parses")).collect()
}

/// Eliminates the last variable of `f` using the linear relation Σ rᵢxᵢ = 0.
pub fn hyperplane_restrict(f: &MultiPoly, relation: &[FieldElement]) -> Result<MultiPoly, CatalogError> {
    let n = f.nvars();
    if relation.len() != n {
        return Err(CatalogError::Arity { expected: n, got: relation.len() });
    }
    let pivot = &relation[n - 1];
    if pivot.is_zero() {
        return Err(CatalogError::ZeroPivot);
    }
    let inv = pivot.inv().unwrap();
    let m = n - 1;
    let mut images: Vec<MultiPoly> = (0..m).map(|i| MultiPoly::var(m, i)).collect();
    let last: Vec<FieldElement> = relation[..m].iter().map(|r| -(r * &inv)).collect();
    images.push(MultiPoly::linear(&last));
    Ok(f.compose(&images))
}

fn sum_relation(n: usize) -> Vec<FieldElement> {
    vec![FieldElement::one(); n]
}

/// Restriction of a linear form in the six coordinates of the P⁵ model to x₅ = −(x₀+…+x₄).
pub fn sextic_linear_form(c: &[FieldElement]) -> Vec<FieldElement> {
    (0..5).map(|k| &c[k] - &c[5]).collect()
}

/// A point of the P⁵ model on x₀+…+x₅ = 0, in P⁴ coordinates.
pub fn sextic_point(v: &[i64]) -> ProjPoint {
    assert_eq!(v.len(), 6);
    assert_eq!(v.iter().sum::<i64>(), 0, "point off the hyperplane");
    pt(&v[..5])
}

/// The action of a permutation of the six P⁵ coordinates on P⁴ = {x₀+…+x₅ = 0}.
pub fn sextic_transform(perm: &Perm) -> ProjTransform {
    assert_eq!(perm.degree(), 6);
    let inv = perm.inverse();
    let mut m = Matrix::zeros(5, 5);
    for r in 0..5 {
        let i = inv.apply(r);
        for c in 0..5 {
            let v = if i == 5 { -1 } else if i == c { 1 } else { 0 };
            m.set(r, c, FieldElement::from_int(v));
        }
    }
    ProjTransform::new(m).expect("permutation action is invertible")
}

/// Σ xᵢxᵢ₊₁xᵢ₊₂ + a·Σ xᵢxᵢ₊₁xᵢ₊₃ with indices mod 5.
pub fn cyclic_five(a: &FieldElement) -> MultiPoly {
    let base = poly("x0*x1*x2 + x1*x2*x3 + x2*x3*x4 + x3*x4*x0 + x4*x0*x1", 5, 1);
    let skew = poly("x0*x1*x3 + x1*x2*x4 + x2*x3*x0 + x3*x4*x1 + x4*x0*x2", 5, 1);
    base.add(&skew.scale(a))
}

fn coordinate_points(n: usize) -> Vec<ProjPoint> {
    (0..n).map(|i| ProjPoint::coordinate(n, i)).collect()
}

/// p₁,…,p₆ of the six-node normal form.
fn six_node_points() -> Vec<ProjPoint> {
    vec![
        pt(&[1, 0, 0, 0, 0]),
        pt(&[0, 0, 1, 0, 0]),
        pt(&[0, 0, 0, 0, 1]),
        pt(&[0, 1, 0, 0, 0]),
        pt(&[0, 0, 0, 1, 0]),
        pt(&[1, 1, 1, 1, 1]),
    ]
}

fn segre_nodes() -> Vec<ProjPoint> {
    (1..6)
        .combinations(2)
        .map(|rest| {
            let v: Vec<i64> = (0..6).map(|i| if i == 0 || rest.contains(&i) { 1 } else { -1 }).collect();
            sextic_point(&v)
        })
        .collect()
}

fn sextic_plane(pairs: &[(usize, usize)]) -> LinearSubspace {
    let eqs: Vec<Vec<FieldElement>> = pairs
        .iter()
        .map(|&(a, b)| {
            let mut c = vec![FieldElement::zero(); 6];
            c[a] = FieldElement::one();
            c[b] = &c[b] + &FieldElement::one();
            sextic_linear_form(&c)
        })
        .collect();
    LinearSubspace::from_equations(&eqs, 5)
}

/// Nodes e_{xᵢ} − e_{yⱼ} of the J14 model, index 3i + j.
fn j14_nodes() -> Vec<ProjPoint> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut v = vec![0i64; 6];
            v[i] = 1;
            v[3 + j] = -1;
            out.push(sextic_point(&v));
        }
    }
    out
}

/// Planes xᵢ = yⱼ = 0, matched with the nodes by index.
pub fn j14_planes() -> Vec<LinearSubspace> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut a = vec![FieldElement::zero(); 6];
            a[i] = FieldElement::one();
            let mut b = vec![FieldElement::zero(); 6];
            b[3 + j] = FieldElement::one();
            out.push(LinearSubspace::from_equations(&[sextic_linear_form(&a), sextic_linear_form(&b)], 5));
        }
    }
    out
}

fn whole(name: &'static str) -> MinimalGroup {
    MinimalGroup { name: "Aut(X)", fingerprint: name, generators: Generators::Whole, transitive: true }
}

/// Builds a catalog entry with exact coefficients.
pub fn catalog_build(tag: Tag) -> CatalogEntry {
    let mut e = CatalogEntry {
        tag,
        form: ParamForm::constant(MultiPoly::zero(5)),
        conductor: 1,
        presentation: "",
        relations: Vec::new(),
        nonvanishing: None,
        expected: None,
        minimal_groups: Vec::new(),
        seed_planes: Vec::new(),
        seed_points: Vec::new(),
    };
    match tag {
        Tag::J15 => {
            let cubes = poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 6, 1);
            e.form = ParamForm::constant(hyperplane_restrict(&cubes, &sum_relation(6)).unwrap());
            e.presentation = "x0+...+x5 = x0^3+...+x5^3 = 0 in P^5 (Segre cubic), with x5 = -(x0+...+x4)";
            e.expected = Some(Expected {
                s: 10,
                p: 15,
                r: 6,
                type1: "J15",
                type2: "31°",
                aut_order: 720,
                fingerprint: "Sym6",
            });
            e.minimal_groups = vec![
                MinimalGroup {
                    name: "Alt5 (standard)",
                    fingerprint: "Alt5",
                    generators: Generators::Sextic(perms(6, &["(1,2,3)", "(1,2,3,4,5)"])),
                    transitive: true,
                },
                MinimalGroup {
                    name: "Sym5 (standard)",
                    fingerprint: "Sym5",
                    generators: Generators::Sextic(perms(6, &["(1,2)", "(1,2,3,4,5)"])),
                    transitive: true,
                },
                MinimalGroup {
                    name: "Alt6",
                    fingerprint: "Alt6",
                    generators: Generators::Sextic(perms(6, &["(1,2,3)", "(2,3,4,5,6)"])),
                    transitive: true,
                },
                whole("Sym6"),
            ];
            e.seed_points = segre_nodes();
            e.seed_planes = vec![sextic_plane(&[(0, 1), (2, 3), (4, 5)])];
        }
        Tag::J14 => {
            let f = poly("x0*x1*x2 - x3*x4*x5", 6, 1);
            e.form = ParamForm::constant(hyperplane_restrict(&f, &sum_relation(6)).unwrap());
            e.presentation = "x0*x1*x2 - x3*x4*x5 = x0+...+x5 = 0 in P^5, with x5 = -(x0+...+x4)";
            e.expected = Some(Expected {
                s: 9,
                p: 9,
                r: 5,
                type1: "J14",
                type2: "30°",
                aut_order: 72,
                fingerprint: "Sym3^2:C2",
            });
            e.minimal_groups = vec![
                MinimalGroup {
                    name: "Sym3^2 (transitive on coordinates)",
                    fingerprint: "Sym3^2",
                    generators: Generators::Sextic(perms(6, &["(1,2,3)", "(4,5,6)", "(1,2)(4,5)", "(1,4)(2,5)(3,6)"])),
                    transitive: true,
                },
                MinimalGroup {
                    name: "C3^2:C4",
                    fingerprint: "C3^2:C4",
                    generators: Generators::Sextic(perms(6, &["(1,2,3)", "(4,5,6)", "(1,5,2,4)(3,6)"])),
                    transitive: true,
                },
                whole("Sym3^2:C2"),
            ];
            e.seed_points = j14_nodes();
            e.seed_planes = j14_planes();
        }
        Tag::J9a => {
            e.form = ParamForm::constant(cyclic_five(&FieldElement::from_int(-1)));
            e.presentation = "sum x_i x_{i+1} x_{i+2} - sum x_i x_{i+1} x_{i+3}, indices mod 5";
            e.expected = Some(Expected {
                s: 6,
                p: 0,
                r: 2,
                type1: "J9",
                type2: "28°",
                aut_order: 120,
                fingerprint: "Sym5",
            });
            e.minimal_groups = vec![whole("Sym5")];
            e.seed_points = coordinate_points(5);
            e.seed_points.push(pt(&[1, 1, 1, 1, 1]));
        }
        Tag::J9b => {
            e.form = ParamForm::constant(poly(
                "x0*x1*x2 - x0*x1*x3 + x0*x1*x4 + x0*x2*x3 - 3*x0*x2*x4 + x0*x3*x4 - x1*x2*x3 \
                 + x1*x2*x4 - x1*x3*x4 + x2*x3*x4",
                5,
                1,
            ));
            e.presentation = "ten-term cubic with coefficients +-1 and -3 on x0*x2*x4";
            e.expected = Some(Expected {
                s: 6,
                p: 0,
                r: 2,
                type1: "J9",
                type2: "28°",
                aut_order: 72,
                fingerprint: "Sym3^2:C2",
            });
            e.minimal_groups = vec![
                MinimalGroup {
                    name: "Sym3^2 (transitive on nodes)",
                    fingerprint: "Sym3^2",
                    generators: Generators::Points(perms(6, &["(1,2,3)", "(4,5,6)", "(1,2)(4,5)", "(1,4)(2,6)(3,5)"])),
                    transitive: true,
                },
                whole("Sym3^2:C2"),
            ];
            e.seed_points = six_node_points();
        }
        Tag::J5a => {
            e.form = ParamForm::constant(poly(
                "x0*x1*x2 + x0*x1*x3 + x0*x1*x4 + x0*x2*x3 + x0*x2*x4 + x0*x3*x4 + x1*x2*x3 + x1*x2*x4 \
                 + x1*x3*x4 + x2*x3*x4",
                5,
                1,
            ));
            e.presentation = "sum over i<j<k of x_i x_j x_k";
            e.expected = Some(Expected {
                s: 5,
                p: 0,
                r: 1,
                type1: "J5",
                type2: "27°",
                aut_order: 120,
                fingerprint: "Sym5",
            });
            e.minimal_groups = vec![
                MinimalGroup {
                    name: "C5:C4",
                    fingerprint: "C5:C4",
                    generators: Generators::Points(perms(5, &["(1,2,3,4,5)", "(2,3,5,4)"])),
                    transitive: true,
                },
                MinimalGroup {
                    name: "Alt5",
                    fingerprint: "Alt5",
                    generators: Generators::Points(perms(5, &["(1,2,3)", "(1,2,3,4,5)"])),
                    transitive: true,
                },
                whole("Sym5"),
            ];
            e.seed_points = coordinate_points(5);
        }
        Tag::J5b => {
            e.form = ParamForm::constant(cyclic_five(&FieldElement::omega()));
            e.conductor = 3;
            e.presentation = "sum x_i x_{i+1} x_{i+2} + w * sum x_i x_{i+1} x_{i+3}, w a primitive cube root of unity";
            e.expected = Some(Expected {
                s: 5,
                p: 0,
                r: 1,
                type1: "J5",
                type2: "27°",
                aut_order: 60,
                fingerprint: "Alt5",
            });
            e.minimal_groups = vec![whole("Alt5")];
            e.seed_points = coordinate_points(5);
        }
        Tag::FamilyJ11 => {
            e.form = param_form(
                "x1*x2*x3 + x4*x0*(x0 - x1 - x2 - x3) + x4^2*(c1*x1 + c2*x2 + c3*x3) + d*x4^3",
                5,
                &["c1", "c2", "c3", "d"],
            );
            e.presentation = "x1x2x3 + x4x0(x0-x1-x2-x3) + x4^2(c1x1+c2x2+c3x3) + d x4^3";
            e.seed_points = vec![
                pt(&[0, 1, 0, 0, 0]),
                pt(&[1, 1, 0, 0, 0]),
                pt(&[0, 0, 1, 0, 0]),
                pt(&[1, 0, 1, 0, 0]),
                pt(&[0, 0, 0, 1, 0]),
                pt(&[1, 0, 0, 1, 0]),
            ];
            e.seed_planes = [[3, 4], [2, 4], [1, 4]]
                .iter()
                .map(|eq| {
                    let rows: Vec<Vec<FieldElement>> = eq
                        .iter()
                        .map(|&k| (0..5).map(|i| FieldElement::from_int((i == k) as i64)).collect())
                        .collect();
                    LinearSubspace::from_equations(&rows, 5)
                })
                .collect();
        }
        Tag::FamilyJ9 => {
            let params = ["A", "B", "C", "D"];
            e.form = param_form(
                "A*x0*x2*x4 + B*(x0*x1*x2 - x1*x2*x3 + x2*x3*x4) + C*(x0*x1*x4 - x0*x1*x3 + x0*x2*x3) \
                 + D*(x0*x3*x4 + x1*x2*x4 - x1*x3*x4)",
                5,
                &params,
            );
            e.presentation = "six-node normal form with coefficients A, B, C, D and A+B+C+D = 0";
            e.relations = vec![param_poly("A + B + C + D", &params)];
            e.nonvanishing = Some(param_poly("A*B*C*D", &params));
            e.seed_points = six_node_points();
        }
        Tag::FamilyFourNode => {
            let params = ["A", "B", "C", "b0", "b1", "b2", "b3", "c"];
            e.form = param_form(
                "x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3 \
                 + x4*(A*(x0*x2 + x1*x3) + B*(x0*x1 + x2*x3) + C*(x1*x2 + x0*x3)) \
                 + x4^2*(b0*x0 + b1*x1 + b2*x2 + b3*x3) + c*x4^3",
                5,
                &params,
            );
            e.presentation = "four-nodal cubic surface plus x4 terms, normalized so paired x4-coefficients agree";
            e.relations = vec![param_poly("A + B + C", &params)];
            e.seed_points = coordinate_points(4).iter().map(|p| {
                let mut v = p.coords().to_vec();
                v.push(FieldElement::zero());
                ProjPoint::new(v).unwrap()
            }).collect();
        }
    }
    e
}

/// How the automorphisms were enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftMethod {
    Frames,
    Torus,
}

#[derive(Debug)]
pub struct Automorphisms {
    pub group: GroupHandle<ProjTransform>,
    pub points: Vec<ProjPoint>,
    pub method: LiftMethod,
    /// Candidate lifts examined.
    pub candidates: usize,
}

impl Automorphisms {
    /// The permutation of singular points induced by a group element.
    pub fn point_perm(&self, t: &ProjTransform) -> Perm {
        Perm::from_images(t.induced_permutation(&self.points).expect("automorphism permutes singular points")).unwrap()
    }

    /// Images of all generators on the singular points.
    pub fn generator_perms(&self) -> Vec<Perm> {
        self.group.generators().iter().map(|g| self.point_perm(g)).collect()
    }
}

fn threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(16)
}

fn frame_lifts(f: &MultiPoly, points: &[ProjPoint], frames: &[Vec<usize>]) -> Result<(Vec<ProjTransform>, usize), CatalogError> {
    let base: Vec<ProjPoint> = frames[0].iter().map(|&i| points[i].clone()).collect();
    let a_inv = frame_matrix(&base)?.inverse().ok_or(ProjError::DegenerateFrame)?;
    let index: HashMap<&ProjPoint, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let k = base.len();
    let try_frame = |s: &[usize]| -> Vec<ProjTransform> {
        let mut out = Vec::new();
        for order in s.iter().permutations(k) {
            let dst: Vec<ProjPoint> = order.iter().map(|&&i| points[i].clone()).collect();
            let Ok(b) = frame_matrix(&dst) else { continue };
            let m = b.mul(&a_inv);
            let permutes = points.iter().all(|p| {
                ProjPoint::new(m.mul_vec(p.coords())).is_ok_and(|q| index.contains_key(&q))
            });
            if !permutes {
                continue;
            }
            let t = ProjTransform::new(m).expect("frame map is invertible");
            if preserves(&t, f) {
                out.push(t);
            }
        }
        out
    };
    let chunk = frames.len().div_ceil(threads()).max(1);
    let found: Vec<ProjTransform> = std::thread::scope(|sc| {
        let handles: Vec<_> = frames
            .chunks(chunk)
            .map(|c| sc.spawn(move || c.iter().flat_map(|s| try_frame(s)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("frame worker panicked")).collect()
    });
    let tried = frames.len() * (1..=k).product::<usize>();
    Ok((found, tried))
}

fn torus_lifts(f: &MultiPoly, points: &[ProjPoint]) -> Result<(Vec<ProjTransform>, usize), CatalogError> {
    let n = f.nvars();
    let a = Matrix::from_columns(&points.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>());
    let to_std = ProjTransform::new(a)?;
    let back = to_std.inverse();
    let g = to_std.pullback(f);
    let mut found = Vec::new();
    let mut tried = 0;
    for perm in (0..n).permutations(n) {
        tried += 1;
        for t in diagonal_lifts(&g, &perm)? {
            found.push(to_std.compose(&t).compose(&back));
        }
    }
    Ok((found, tried))
}

/// Closes the lifts under products, confirming they already form a group.
fn close(identity: ProjTransform, found: Vec<ProjTransform>) -> Result<GroupHandle<ProjTransform>, CatalogError> {
    let mut gens: Vec<ProjTransform> = Vec::new();
    let mut g = GroupHandle::trivial(identity.clone());
    for t in &found {
        if !g.contains(t) {
            gens.push(t.clone());
            g = GroupHandle::closure_with_identity(identity.clone(), gens.clone())?;
        }
    }
    if g.order() != found.len() {
        return Err(CatalogError::NotClosed { found: found.len(), closure: g.order() });
    }
    Ok(g)
}

/// The full group of projectivities preserving X, from its certified singular points.
pub fn compute_automorphism_group(f: &MultiPoly, points: &[ProjPoint]) -> Result<Automorphisms, CatalogError> {
    let dim = f.nvars();
    let k = dim + 1;
    let frames: Vec<Vec<usize>> = if points.len() >= k {
        (0..points.len())
            .combinations(k)
            .filter(|s| {
                let sub: Vec<ProjPoint> = s.iter().map(|&i| points[i].clone()).collect();
                general_position(&sub).is_ok()
            })
            .collect()
    } else {
        Vec::new()
    };
    let (found, candidates, method) = if !frames.is_empty() {
        let (found, tried) = frame_lifts(f, points, &frames)?;
        (found, tried, LiftMethod::Frames)
    } else if points.len() == dim && general_position(points).is_ok() {
        let (found, tried) = torus_lifts(f, points)?;
        (found, tried, LiftMethod::Torus)
    } else {
        return Err(CatalogError::NoFrame);
    };
    let group = close(ProjTransform::identity(dim), found)?;
    Ok(Automorphisms { group, points: points.to_vec(), method, candidates })
}

/// The subgroup of Aut(X) named by a catalog listing.
pub fn resolve_generators(aut: &Automorphisms, gens: &Generators) -> Result<GroupHandle<ProjTransform>, CatalogError> {
    let identity = ProjTransform::identity(aut.group.element(0).dim());
    let ts: Vec<ProjTransform> = match gens {
        Generators::Whole => aut.group.generators().to_vec(),
        Generators::Sextic(ps) => ps
            .iter()
            .map(|p| {
                let t = sextic_transform(p);
                if aut.group.contains(&t) {
                    Ok(t)
                } else {
                    Err(CatalogError::NotAnAutomorphism(p.to_string()))
                }
            })
            .collect::<Result<_, _>>()?,
        Generators::Points(ps) => ps
            .iter()
            .map(|p| {
                aut.group
                    .elements()
                    .iter()
                    .find(|t| t.induced_permutation(&aut.points).as_deref() == Some(p.images()))
                    .cloned()
                    .ok_or_else(|| CatalogError::NotAnAutomorphism(p.to_string()))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(GroupHandle::closure_with_identity(identity, ts)?)
}

/// The projectivity T with T(pᵢ) = p_{perm(i)}, for n+1 points in general position.
pub fn lift_point_perm(points: &[ProjPoint], perm: &Perm) -> Result<ProjTransform, CatalogError> {
    let dst: Vec<ProjPoint> = (0..points.len()).map(|i| points[perm.apply(i)].clone()).collect();
    Ok(crate::projective::frame_map(points, &dst)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{identify, Fingerprint};

    #[test]
    fn tags_round_trip() {
        for t in Tag::ALL {
            assert_eq!(t.name().parse::<Tag>().unwrap(), t);
        }
        assert_eq!("j9B".parse::<Tag>().unwrap(), Tag::J9b);
        assert!(matches!("J7".parse::<Tag>(), Err(CatalogError::UnknownTag(_))));
    }

    #[test]
    fn restriction_examples() {
        let cubes = poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 6, 1);
        let s = hyperplane_restrict(&cubes, &sum_relation(6)).unwrap();
        let expect = poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 - (x0 + x1 + x2 + x3 + x4)^3", 5, 1);
        assert_eq!(s, expect);
        let j14 = hyperplane_restrict(&poly("x0*x1*x2 - x3*x4*x5", 6, 1), &sum_relation(6)).unwrap();
        assert_eq!(j14, poly("x0*x1*x2 + x3*x4*(x0 + x1 + x2 + x3 + x4)", 5, 1));
        let mut only_last = vec![FieldElement::zero(); 6];
        only_last[5] = FieldElement::one();
        let f = poly("x0*x5^2 + x1^3 - x2*x3*x4", 6, 1);
        assert_eq!(hyperplane_restrict(&f, &only_last).unwrap(), poly("x1^3 - x2*x3*x4", 5, 1));
        let mut bad = sum_relation(6);
        bad[5] = FieldElement::zero();
        assert_eq!(hyperplane_restrict(&f, &bad), Err(CatalogError::ZeroPivot));
    }

    #[test]
    fn entries_are_cubic_and_seeds_lie_on_them() {
        for t in Tag::ALL {
            let e = catalog_build(t);
            let values: Vec<FieldElement> = (0..e.form.nparams()).map(|k| FieldElement::from_int(k as i64 + 2)).collect();
            let f = e.form.specialize(&values);
            assert!(f.is_homogeneous() && f.degree() == 3, "{t}");
            for p in &e.seed_points {
                let full: Vec<MultiPoly> = (0..e.form.poly.nvars())
                    .map(|i| {
                        if i < 5 {
                            MultiPoly::constant(e.form.nparams(), p.coords()[i].clone())
                        } else {
                            MultiPoly::var(e.form.nparams(), i - 5)
                        }
                    })
                    .collect();
                let value = e.form.poly.compose(&full);
                let on_x = value.is_zero()
                    || crate::ideal::ideal_member(&value, &crate::ideal::Ideal::new(e.relations.clone()), &Default::default())
                        .unwrap();
                assert!(on_x, "{t} seed point {p} off X");
            }
        }
    }

    #[test]
    fn seed_planes_lie_on_their_cubics() {
        for t in [Tag::J15, Tag::J14] {
            let e = catalog_build(t);
            for s in &e.seed_planes {
                assert!(crate::projective::plane_contained(s, e.cubic().unwrap()), "{t}");
            }
        }
    }

    #[test]
    fn sextic_transforms_compose() {
        let a = Perm::from_cycles("(1,2,3)", 6).unwrap();
        let b = Perm::from_cycles("(1,6)(2,4)", 6).unwrap();
        assert_eq!(sextic_transform(&a.compose(&b)), sextic_transform(&a).compose(&sextic_transform(&b)));
        let nodes = segre_nodes();
        let f = catalog_build(Tag::J15).form.poly;
        assert!(preserves(&sextic_transform(&b), &f));
        assert!(sextic_transform(&b).induced_permutation(&nodes).is_some());
    }

    #[test]
    fn five_point_automorphisms() {
        let e = catalog_build(Tag::J5a);
        let aut = compute_automorphism_group(e.cubic().unwrap(), &e.seed_points).unwrap();
        assert_eq!(aut.method, LiftMethod::Torus);
        assert_eq!(aut.group.order(), 120);
        assert_eq!(identify(&Fingerprint::of(&aut.group)), Some("Sym5"));
        let e = catalog_build(Tag::J5b);
        let aut = compute_automorphism_group(e.cubic().unwrap(), &e.seed_points).unwrap();
        assert_eq!(aut.group.order(), 60);
        assert_eq!(identify(&Fingerprint::of(&aut.group)), Some("Alt5"));
    }

    #[test]
    fn six_point_automorphisms() {
        let e = catalog_build(Tag::J9b);
        let aut = compute_automorphism_group(e.cubic().unwrap(), &e.seed_points).unwrap();
        assert_eq!(aut.method, LiftMethod::Frames);
        assert_eq!(aut.group.order(), 72);
        assert_eq!(identify(&Fingerprint::of(&aut.group)), Some("Sym3^2:C2"));
        let g2 = resolve_generators(&aut, &e.minimal_groups[0].generators).unwrap();
        assert_eq!(identify(&Fingerprint::of(&g2)), Some("Sym3^2"));
    }

    #[test]
    fn collinear_configuration_has_no_frame() {
        let e = catalog_build(Tag::FamilyJ11);
        let f = e.form.specialize(&[FieldElement::frac(1, 3), FieldElement::frac(1, 3), FieldElement::frac(1, 3), FieldElement::one()]);
        assert!(matches!(compute_automorphism_group(&f, &e.seed_points), Err(CatalogError::NoFrame)));
    }
}
