//! Invariant subspaces of finite projective matrix groups.
//!
//! The module kⁿ is split into isotypic components using averaged
//! eigenprojectors: for an element g and an eigenvalue λ, the average of
//! h·π_λ(g)·h⁻¹ over the group is central in the commutant and acts on the
//! component of type W by the rational scalar dim E_λ(g|W) / dim W. Each
//! component W^m then carries a P^{m−1} of irreducible submodules, so invariant
//! subspaces are finite in number exactly when no multiplicity is used partially.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupError, GroupHandle};
use crate::arith::FieldElement;
use crate::linalg::{nullspace_generic, Matrix};
use crate::projective::{LinearSubspace, ProjPoint, ProjTransform};

/// Largest conductor used for eigenvalues of group elements.
pub const EIGEN_CONDUCTOR: u32 = 60;

const RANDOM_WORDS: usize = 24;
const WORD_SEED: u64 = 0x6d65_6174;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicComponent {
    pub space: LinearSubspace,
    pub multiplicity: usize,
    pub irreducible_dim: usize,
    /// One irreducible submodule of the component.
    pub irreducible: LinearSubspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleStructure {
    pub ambient: usize,
    /// Dimension of the algebra of matrices commuting with the group; 1 certifies absolute irreducibility.
    pub commutant_dim: usize,
    pub components: Vec<IsotypicComponent>,
}

impl ModuleStructure {
    pub fn is_irreducible(&self) -> bool {
        self.commutant_dim == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantSubspaces {
    Finite(Vec<LinearSubspace>),
    /// Infinitely many; one representative per way of filling the dimension.
    Infinite { witnesses: Vec<LinearSubspace> },
}

impl InvariantSubspaces {
    pub fn is_empty(&self) -> bool {
        matches!(self, InvariantSubspaces::Finite(v) if v.is_empty())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, InvariantSubspaces::Infinite { .. })
    }

    pub fn subspaces(&self) -> &[LinearSubspace] {
        match self {
            InvariantSubspaces::Finite(v) => v,
            InvariantSubspaces::Infinite { witnesses } => witnesses,
        }
    }
}

/// Invariant points, lines and planes of a group acting on P⁴ (or any Pⁿ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedFlats {
    pub points: InvariantSubspaces,
    pub lines: InvariantSubspaces,
    pub planes: InvariantSubspaces,
}

impl FixedFlats {
    pub fn fixed_points(&self) -> Vec<ProjPoint> {
        self.points.subspaces().iter().filter_map(LinearSubspace::as_point).collect()
    }
}

fn restrict(m: &Matrix, basis: &[Vec<FieldElement>]) -> Matrix {
    let b = Matrix::from_columns(basis);
    let cols: Vec<Vec<FieldElement>> = basis.iter().map(|v| b.solve(&m.mul_vec(v)).expect("subspace not invariant")).collect();
    Matrix::from_columns(&cols)
}

fn lift(coords: &[FieldElement], basis: &[Vec<FieldElement>]) -> Vec<FieldElement> {
    let n = basis[0].len();
    let mut v = vec![FieldElement::zero(); n];
    for (c, b) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            *x = &*x + &(c * y);
        }
    }
    v
}

/// Basis of {X : A·X = X·A for every A}.
fn commutant(mats: &[Matrix], u: usize) -> Vec<Matrix> {
    let var = |i: usize, k: usize| i * u + k;
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for a in mats {
        for i in 0..u {
            for j in 0..u {
                let mut row = vec![FieldElement::zero(); u * u];
                for k in 0..u {
                    let x = &row[var(k, j)] + a.get(i, k);
                    row[var(k, j)] = x;
                    let y = &row[var(i, k)] - a.get(k, j);
                    row[var(i, k)] = y;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return (0..u * u)
            .map(|t| {
                let mut m = Matrix::zeros(u, u);
                m.set(t / u, t % u, FieldElement::one());
                m
            })
            .collect();
    }
    nullspace_generic(&rows, u * u)
        .into_iter()
        .map(|v| Matrix::new(v.chunks(u).map(<[FieldElement]>::to_vec).collect()))
        .collect()
}

fn center_dim(basis: &[Matrix]) -> usize {
    let k = basis.len();
    if k <= 1 {
        return k;
    }
    let u = basis[0].nrows();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    let comms: Vec<Vec<Matrix>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| x.mul(y).sub(&y.mul(x))).collect())
        .collect();
    for m in 0..k {
        for i in 0..u {
            for j in 0..u {
                let row: Vec<FieldElement> = (0..k).map(|l| comms[l][m].get(i, j).clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return k;
    }
    nullspace_generic(&rows, k).len()
}

/// Eigenvalues and eigenspaces of a matrix with a scalar power.
fn eigenspaces(a: &Matrix) -> Option<Vec<(FieldElement, Vec<Vec<FieldElement>>)>> {
    let n = a.nrows();
    let mut p = a.clone();
    let mut k = 1u32;
    let c = loop {
        if let Some(c) = p.scalar_value() {
            break c;
        }
        k += 1;
        if k > 720 {
            return None;
        }
        p = p.mul(a);
    };
    let roots = c.kth_roots(k, EIGEN_CONDUCTOR)?;
    let mut out = Vec::new();
    for r in roots {
        let shifted = a.sub(&Matrix::identity(n).scale(&r));
        let ker = shifted.nullspace();
        if !ker.is_empty() {
            out.push((r, ker));
        }
    }
    Some(out)
}

fn eigenprojector(a: &Matrix, lambda: &FieldElement, all: &[FieldElement]) -> Matrix {
    let n = a.nrows();
    let mut p = Matrix::identity(n);
    for mu in all {
        if mu == lambda {
            continue;
        }
        let f = (lambda - mu).inv().unwrap();
        p = p.mul(&a.sub(&Matrix::identity(n).scale(mu)).scale(&f));
    }
    p
}

struct Workspace<'a> {
    group: &'a GroupHandle<ProjTransform>,
    n: usize,
    gens: Vec<Matrix>,
    /// (M_h, M_{h⁻¹}/s) with M_h·M_{h⁻¹} = s·I.
    conj: Vec<(Matrix, Matrix)>,
}

impl<'a> Workspace<'a> {
    fn new(group: &'a GroupHandle<ProjTransform>) -> Self {
        let n = group.element(0).dim();
        let gens = group.generators().iter().map(|g| g.matrix().clone()).collect();
        let conj = (0..group.order())
            .map(|h| {
                let m = group.element(h).matrix().clone();
                let mi = group.element(group.inv(h)).matrix().clone();
                let s = m.mul(&mi).scalar_value().unwrap();
                (m, mi.scale(&s.inv().unwrap()))
            })
            .collect();
        Workspace { group, n, gens, conj }
    }

    fn candidate_elements(&self) -> Vec<usize> {
        let g = self.group;
        let gi = g.generator_indices();
        let mut out: Vec<usize> = gi.clone();
        for &a in &gi {
            for &b in &gi {
                out.push(g.mul(a, b));
            }
        }
        if !gi.is_empty() {
            let mut rng = ChaCha8Rng::seed_from_u64(WORD_SEED);
            for _ in 0..RANDOM_WORDS {
                let len = rng.gen_range(2..=6);
                let mut x = 0;
                for _ in 0..len {
                    x = g.mul(x, gi[rng.gen_range(0..gi.len())]);
                }
                out.push(x);
            }
        }
        out.extend(0..g.order());
        let mut seen = vec![false; g.order()];
        out.retain(|&x| !std::mem::replace(&mut seen[x], true));
        out
    }

    fn average(&self, p: &Matrix) -> Matrix {
        let mut acc = Matrix::zeros(self.n, self.n);
        for (m, mi) in &self.conj {
            acc = acc.add(&m.mul(p).mul(mi));
        }
        acc
    }

    fn spin(&self, v: &[FieldElement]) -> LinearSubspace {
        let vs: Vec<Vec<FieldElement>> = self.conj.iter().map(|(m, _)| m.mul_vec(v)).collect();
        LinearSubspace::span(&vs, self.n)
    }

    fn restricted_commutant(&self, basis: &[Vec<FieldElement>]) -> Vec<Matrix> {
        let r: Vec<Matrix> = self.gens.iter().map(|g| restrict(g, basis)).collect();
        commutant(&r, basis.len())
    }

    /// An irreducible submodule of the invariant subspace spanned by `basis`.
    fn find_irreducible(&self, basis: &[Vec<FieldElement>], target: usize) -> Result<LinearSubspace, GroupError> {
        let u = basis.len();
        if u == target {
            return Ok(LinearSubspace::span(basis, self.n));
        }
        for x in self.restricted_commutant(basis) {
            let ker = x.nullspace();
            if !ker.is_empty() && ker.len() < u {
                let sub: Vec<Vec<FieldElement>> = ker.iter().map(|c| lift(c, basis)).collect();
                return self.find_irreducible(&sub, target);
            }
        }
        let mut best: Option<LinearSubspace> = None;
        for e in self.candidate_elements() {
            let a = restrict(self.group.element(e).matrix(), basis);
            let Some(eig) = eigenspaces(&a) else { continue };
            for (_, ker) in eig {
                for c in ker {
                    let s = self.spin(&lift(&c, basis));
                    if s.linear_dim() == target {
                        return Ok(s);
                    }
                    if best.as_ref().is_none_or(|b| s.linear_dim() < b.linear_dim()) {
                        best = Some(s);
                    }
                }
            }
        }
        match best {
            Some(b) if b.linear_dim() < u => self.find_irreducible(b.basis(), target),
            _ => Err(GroupError::NonSplit),
        }
    }
}

/// Isotypic decomposition of the natural module of a projective matrix group.
pub fn decompose(group: &GroupHandle<ProjTransform>) -> Result<ModuleStructure, GroupError> {
    let ws = Workspace::new(group);
    let n = ws.n;
    let commutant_dim = commutant(&ws.gens, n).len();
    let whole: Vec<Vec<FieldElement>> = Matrix::identity(n).rows().to_vec();
    let mut comps: Vec<(Vec<Vec<FieldElement>>, bool)> = vec![(whole.clone(), center_dim(&commutant(&ws.gens, n)) == 1)];
    let order = FieldElement::from_int(group.order() as i64);
    let mut scalars: Vec<FieldElement> = Vec::new();
    for b in 1..=n as i64 {
        for a in 0..=b {
            let s = &order * &FieldElement::frac(a, b);
            if !scalars.contains(&s) {
                scalars.push(s);
            }
        }
    }
    for e in ws.candidate_elements() {
        if comps.iter().all(|c| c.1) {
            break;
        }
        let m = group.element(e).matrix();
        let Some(eig) = eigenspaces(m) else { continue };
        let values: Vec<FieldElement> = eig.iter().map(|x| x.0.clone()).collect();
        for lambda in &values {
            if comps.iter().all(|c| c.1) {
                break;
            }
            let avg = ws.average(&eigenprojector(m, lambda, &values));
            let mut next = Vec::new();
            for (basis, iso) in comps {
                if iso {
                    next.push((basis, iso));
                    continue;
                }
                let r = restrict(&avg, &basis);
                let u = basis.len();
                let mut parts: Vec<Vec<Vec<FieldElement>>> = Vec::new();
                for s in &scalars {
                    let ker = r.sub(&Matrix::identity(u).scale(s)).nullspace();
                    if !ker.is_empty() {
                        parts.push(ker.iter().map(|c| lift(c, &basis)).collect());
                    }
                }
                if parts.len() > 1 && parts.iter().map(Vec::len).sum::<usize>() == u {
                    for p in parts {
                        let iso = center_dim(&ws.restricted_commutant(&p)) == 1;
                        next.push((p, iso));
                    }
                } else {
                    next.push((basis, iso));
                }
            }
            comps = next;
        }
    }
    if !comps.iter().all(|c| c.1) {
        return Err(GroupError::NonSplit);
    }
    let mut components = Vec::new();
    for (basis, _) in comps {
        let c = ws.restricted_commutant(&basis).len();
        let m = (1..=n).find(|m| m * m == c).ok_or(GroupError::NonSplit)?;
        let w = basis.len() / m;
        let irreducible = ws.find_irreducible(&basis, w)?;
        components.push(IsotypicComponent {
            space: LinearSubspace::span(&basis, n),
            multiplicity: m,
            irreducible_dim: w,
            irreducible,
        });
    }
    components.sort_by_key(|c| (c.irreducible_dim, c.multiplicity));
    Ok(ModuleStructure { ambient: n, commutant_dim, components })
}

/// j isomorphic copies of an irreducible submodule inside its isotypic component.
fn copies(comm: &[Matrix], w0: &LinearSubspace, j: usize) -> LinearSubspace {
    let n = w0.ambient();
    let w = w0.linear_dim();
    let mut acc = w0.clone();
    for x in comm {
        if acc.linear_dim() == j * w {
            break;
        }
        let img: Vec<Vec<FieldElement>> = w0.basis().iter().map(|v| x.mul_vec(v)).collect();
        let mut all = acc.basis().to_vec();
        all.extend(img);
        let cand = LinearSubspace::span(&all, n);
        if cand.linear_dim() == acc.linear_dim() + w {
            acc = cand;
        }
    }
    acc
}

/// All G-invariant linear subspaces of linear dimension d.
pub fn invariant_subspaces(group: &GroupHandle<ProjTransform>, d: usize) -> Result<InvariantSubspaces, GroupError> {
    let st = decompose(group)?;
    let n = st.ambient;
    let gens: Vec<Matrix> = group.generators().iter().map(|g| g.matrix().clone()).collect();
    let comm = commutant(&gens, n);
    let comps = &st.components;
    let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
    for c in comps {
        choices = choices
            .into_iter()
            .flat_map(|ch| (0..=c.multiplicity).map(move |j| {
                let mut v = ch.clone();
                v.push(j);
                v
            }))
            .collect();
    }
    let mut finite = Vec::new();
    let mut infinite = false;
    for ch in choices {
        let dim: usize = ch.iter().zip(comps).map(|(j, c)| j * c.irreducible_dim).sum();
        if dim != d {
            continue;
        }
        let mut vs: Vec<Vec<FieldElement>> = Vec::new();
        for (&j, c) in ch.iter().zip(comps) {
            if j == 0 {
                continue;
            }
            if j == c.multiplicity {
                vs.extend(c.space.basis().iter().cloned());
            } else {
                infinite = true;
                vs.extend(copies(&comm, &c.irreducible, j).basis().iter().cloned());
            }
        }
        let s = LinearSubspace::span(&vs, n);
        debug_assert!(group.generators().iter().all(|g| s.is_invariant(g)));
        finite.push(s);
    }
    Ok(if infinite { InvariantSubspaces::Infinite { witnesses: finite } } else { InvariantSubspaces::Finite(finite) })
}

/// Invariant points, lines and planes.
pub fn fixed_flats(group: &GroupHandle<ProjTransform>) -> Result<FixedFlats, GroupError> {
    Ok(FixedFlats {
        points: invariant_subspaces(group, 1)?,
        lines: invariant_subspaces(group, 2)?,
        planes: invariant_subspaces(group, 3)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Perm;

    fn perm_matrices(n: usize, cycles: &[&str]) -> GroupHandle<ProjTransform> {
        let gens: Vec<ProjTransform> = cycles
            .iter()
            .map(|c| ProjTransform::permutation(Perm::from_cycles(c, n).unwrap().images()))
            .collect();
        GroupHandle::closure_with_identity(ProjTransform::identity(n), gens).unwrap()
    }

    fn ones(n: usize) -> LinearSubspace {
        LinearSubspace::span(&[vec![FieldElement::one(); n]], n)
    }

    #[test]
    fn sym5_permutation_module() {
        let g = perm_matrices(5, &["(1,2)", "(1,2,3,4,5)"]);
        let st = decompose(&g).unwrap();
        assert_eq!(st.commutant_dim, 2);
        assert_eq!(invariant_subspaces(&g, 1).unwrap(), InvariantSubspaces::Finite(vec![ones(5)]));
        let hyper = LinearSubspace::from_equations(&[vec![FieldElement::one(); 5]], 5);
        assert_eq!(invariant_subspaces(&g, 4).unwrap(), InvariantSubspaces::Finite(vec![hyper]));
        assert!(invariant_subspaces(&g, 3).unwrap().is_empty());
    }

    #[test]
    fn trivial_group_has_infinitely_many() {
        let g = GroupHandle::trivial(ProjTransform::identity(5));
        let r = invariant_subspaces(&g, 2).unwrap();
        assert!(r.is_infinite());
        assert_eq!(r.subspaces()[0].linear_dim(), 2);
    }

    #[test]
    fn cyclic_shift_fixes_five_points() {
        let g = perm_matrices(5, &["(1,2,3,4,5)"]);
        let flats = fixed_flats(&g).unwrap();
        let pts = flats.fixed_points();
        assert_eq!(pts.len(), 5);
        assert!(pts.iter().all(|p| p.conductor() == 5 || p.conductor() == 1));
        let z = FieldElement::root_of_unity(5, 1);
        let eig = ProjPoint::new((0..5).map(|k| z.pow(k)).collect()).unwrap();
        assert!(pts.contains(&eig));
    }

    #[test]
    fn subspaces_are_invariant() {
        let g = perm_matrices(5, &["(1,2,3,4,5)", "(2,5)(3,4)"]);
        for d in 1..5 {
            for s in invariant_subspaces(&g, d).unwrap().subspaces() {
                assert_eq!(s.linear_dim(), d);
                assert!(g.generators().iter().all(|t| s.is_invariant(t)));
            }
        }
    }
}
