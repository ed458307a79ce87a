//! Points, linear subspaces and projectivities of Pⁿ.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::arith::FieldElement;
use crate::linalg::{rref_in_place, Matrix};
use crate::poly::{proportionality, MultiPoly};

/// Largest conductor used when extracting roots for diagonal lifts.
pub const LIFT_CONDUCTOR: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error("zero vector is not a projective point")]
    ZeroVector,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("points do not form a projective frame")]
    DegenerateFrame,
    #[error("diagonal solutions form a positive-dimensional family")]
    PositiveDimensional,
    #[error("root extraction leaves the supported cyclotomic range")]
    UnsupportedRoot,
}

fn normalize(v: &mut [FieldElement]) -> Result<(), ProjError> {
    let k = v.iter().position(|x| !x.is_zero()).ok_or(ProjError::ZeroVector)?;
    if !v[k].is_one() {
        let inv = v[k].inv().unwrap();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
    Ok(())
}

fn fmt_coords(v: &[FieldElement], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).join(sep)
}

/// A point of Pⁿ with first nonzero coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn new(mut coords: Vec<FieldElement>) -> Result<Self, ProjError> {
        normalize(&mut coords)?;
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(v: &[i64]) -> Result<Self, ProjError> {
        Self::new(v.iter().map(|&x| FieldElement::from_int(x)).collect())
    }

    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut v = vec![FieldElement::zero(); n];
        v[i] = FieldElement::one();
        ProjPoint { coords: v }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Number of homogeneous coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn conj(&self) -> ProjPoint {
        ProjPoint::new(self.coords.iter().map(FieldElement::conj).collect()).unwrap()
    }

    pub fn conductor(&self) -> u32 {
        crate::arith::common_conductor(&self.coords)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_coords(&self.coords, ":"))
    }
}

/// Linear subspace of kⁿ⁺¹ stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    basis: Vec<Vec<FieldElement>>,
    ambient: usize,
}

impl LinearSubspace {
    pub fn span(vectors: &[Vec<FieldElement>], ambient: usize) -> Self {
        let mut rows: Vec<Vec<FieldElement>> = vectors.to_vec();
        for r in &rows {
            assert_eq!(r.len(), ambient);
        }
        let piv = rref_in_place(&mut rows);
        rows.truncate(piv.len());
        LinearSubspace { basis: rows, ambient }
    }

    pub fn span_points(points: &[ProjPoint]) -> Self {
        let n = points.first().map(ProjPoint::len).unwrap_or(0);
        Self::span(&points.iter().map(|p| p.coords.clone()).collect::<Vec<_>>(), n)
    }

    pub fn zero(ambient: usize) -> Self {
        LinearSubspace { basis: Vec::new(), ambient }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::span(Matrix::identity(ambient).rows(), ambient)
    }

    /// Common zero set of linear forms given by coefficient vectors.
    pub fn from_equations(eqs: &[Vec<FieldElement>], ambient: usize) -> Self {
        if eqs.is_empty() {
            return Self::whole(ambient);
        }
        Self::span(&crate::linalg::nullspace_generic(eqs, ambient), ambient)
    }

    /// Common zero set of linear forms.
    pub fn from_forms(forms: &[MultiPoly]) -> Option<Self> {
        let n = forms.first()?.nvars();
        let eqs: Option<Vec<_>> = forms.iter().map(MultiPoly::linear_coeffs).collect();
        Some(Self::from_equations(&eqs?, n))
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn linear_dim(&self) -> usize {
        self.basis.len()
    }

    /// Projective dimension; −1 for the empty subspace.
    pub fn dim_proj(&self) -> i32 {
        self.basis.len() as i32 - 1
    }

    /// Coefficient vectors of a minimal set of defining linear forms.
    pub fn equations(&self) -> Vec<Vec<FieldElement>> {
        if self.basis.is_empty() {
            return Matrix::identity(self.ambient).rows().to_vec();
        }
        let eqs = crate::linalg::nullspace_generic(&self.basis, self.ambient);
        let mut rows = eqs;
        let piv = rref_in_place(&mut rows);
        rows.truncate(piv.len());
        rows
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref_in_place(&mut rows).len() == self.basis.len()
    }

    pub fn contains_point(&self, p: &ProjPoint) -> bool {
        self.contains_vector(p.coords())
    }

    pub fn contains(&self, other: &LinearSubspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn image(&self, t: &ProjTransform) -> LinearSubspace {
        let vs: Vec<_> = self.basis.iter().map(|v| t.matrix.mul_vec(v)).collect();
        Self::span(&vs, self.ambient)
    }

    pub fn is_invariant(&self, t: &ProjTransform) -> bool {
        self.image(t) == *self
    }

    /// Coordinate images x_i = Σ_k t_k·b_k[i] in as many variables as basis vectors.
    pub fn parametrization(&self) -> Vec<MultiPoly> {
        let k = self.basis.len();
        (0..self.ambient)
            .map(|i| {
                let coeffs: Vec<FieldElement> = self.basis.iter().map(|b| b[i].clone()).collect();
                if k == 0 {
                    MultiPoly::zero(0)
                } else {
                    MultiPoly::linear(&coeffs)
                }
            })
            .collect()
    }

    /// The point represented by a 1-dimensional subspace.
    pub fn as_point(&self) -> Option<ProjPoint> {
        (self.basis.len() == 1).then(|| ProjPoint::new(self.basis[0].clone()).unwrap())
    }

    pub fn fmt_equations(&self) -> String {
        let names = crate::poly::default_names(self.ambient);
        let eqs: Vec<String> = self.equations().iter().map(|e| MultiPoly::linear(e).fmt_with(&names)).collect();
        if eqs.is_empty() {
            "everything".into()
        } else {
            format!("{} = 0", eqs.join(" = "))
        }
    }
}

impl fmt::Display for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_equations())
    }
}

/// Join and intersection.
pub fn span_meet(a: &LinearSubspace, b: &LinearSubspace) -> (LinearSubspace, LinearSubspace) {
    assert_eq!(a.ambient, b.ambient);
    let mut all = a.basis.clone();
    all.extend(b.basis.iter().cloned());
    let span = LinearSubspace::span(&all, a.ambient);
    let mut eqs = a.equations();
    eqs.extend(b.equations());
    let meet = LinearSubspace::from_equations(&eqs, a.ambient);
    (span, meet)
}

/// Projectivity represented by a matrix whose first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjTransform {
    matrix: Matrix,
}

impl ProjTransform {
    pub fn new(m: Matrix) -> Result<Self, ProjError> {
        if m.nrows() != m.ncols() {
            return Err(ProjError::DimensionMismatch(m.nrows(), m.ncols()));
        }
        if m.det().is_zero() {
            return Err(ProjError::Singular);
        }
        Ok(Self::normalized(m))
    }

    fn normalized(m: Matrix) -> Self {
        let mut rows = m.rows().to_vec();
        let first = rows.iter().flatten().find(|x| !x.is_zero()).cloned().unwrap();
        if !first.is_one() {
            let inv = first.inv().unwrap();
            for x in rows.iter_mut().flatten() {
                *x = &*x * &inv;
            }
        }
        ProjTransform { matrix: Matrix::new(rows) }
    }

    pub fn identity(n: usize) -> Self {
        ProjTransform { matrix: Matrix::identity(n) }
    }

    /// Sends e_i to e_{images[i]}.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &j) in images.iter().enumerate() {
            m.set(j, i, FieldElement::one());
        }
        ProjTransform { matrix: m }
    }

    pub fn diagonal(d: &[FieldElement]) -> Result<Self, ProjError> {
        Self::new(Matrix::diagonal(d))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.matrix.mul_vec(p.coords())).unwrap()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ProjTransform) -> ProjTransform {
        Self::normalized(self.matrix.mul(&other.matrix))
    }

    pub fn inverse(&self) -> ProjTransform {
        Self::normalized(self.matrix.inverse().unwrap())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.dim())
    }

    /// The form f∘T, i.e. x ↦ f(Tx).
    pub fn pullback(&self, f: &MultiPoly) -> MultiPoly {
        f.substitute_matrix(&self.matrix).expect("dimension mismatch")
    }

    /// Index permutation ρ with T(p_i) = p_{ρ(i)}, if T permutes the points.
    pub fn induced_permutation(&self, points: &[ProjPoint]) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            let q = self.apply(p);
            out.push(points.iter().position(|r| *r == q)?);
        }
        Some(out)
    }
}

impl fmt::Display for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.matrix.rows().iter().map(|r| format!("[{}]", fmt_coords(r, ", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// True iff f∘T is a scalar multiple of f.
pub fn preserves(t: &ProjTransform, f: &MultiPoly) -> bool {
    t.dim() == f.nvars() && proportionality(f, &t.pullback(f)).is_some()
}

/// f restricted to a parametrization of the subspace.
pub fn restrict(f: &MultiPoly, s: &LinearSubspace) -> MultiPoly {
    let k = s.linear_dim();
    let images: Vec<MultiPoly> = s
        .parametrization()
        .into_iter()
        .map(|p| if k == 0 { MultiPoly::zero(0) } else { p })
        .collect();
    f.compose(&images)
}

/// True iff the plane lies on V(f).
pub fn plane_contained(plane: &LinearSubspace, f: &MultiPoly) -> bool {
    plane.dim_proj() == 2 && plane.ambient() == f.nvars() && restrict(f, plane).is_zero()
}

/// Every subspace contained in V(f).
pub fn subspace_contained(s: &LinearSubspace, f: &MultiPoly) -> bool {
    s.linear_dim() == 0 || restrict(f, s).is_zero()
}

/// Checks that no d of the points lie in a P^{d−2}; the error is a minimal violating subset.
pub fn general_position(points: &[ProjPoint]) -> Result<(), Vec<usize>> {
    let Some(first) = points.first() else { return Ok(()) };
    let n = first.len();
    for d in 2..=n.min(points.len()) {
        for subset in (0..points.len()).combinations(d) {
            let mut rows: Vec<Vec<FieldElement>> = subset.iter().map(|&i| points[i].coords.clone()).collect();
            if rref_in_place(&mut rows).len() < d {
                return Err(subset);
            }
        }
    }
    Ok(())
}

/// Matrix sending e_i to λ_i·p_i and the all-ones vector to p_{n}.
pub fn frame_matrix(pts: &[ProjPoint]) -> Result<Matrix, ProjError> {
    let n = pts[0].len();
    if pts.len() != n + 1 {
        return Err(ProjError::DimensionMismatch(pts.len(), n + 1));
    }
    let a = Matrix::from_columns(&pts[..n].iter().map(|p| p.coords.clone()).collect::<Vec<_>>());
    let lambda = a.solve(pts[n].coords()).ok_or(ProjError::DegenerateFrame)?;
    if a.det().is_zero() || lambda.iter().any(FieldElement::is_zero) {
        return Err(ProjError::DegenerateFrame);
    }
    let cols: Vec<Vec<FieldElement>> = pts[..n]
        .iter()
        .zip(&lambda)
        .map(|(p, l)| p.coords.iter().map(|x| x * l).collect())
        .collect();
    Ok(Matrix::from_columns(&cols))
}

/// The unique projectivity carrying src_i to dst_i for two frames of n+1 points in P^{n−1}.
pub fn frame_map(src: &[ProjPoint], dst: &[ProjPoint]) -> Result<ProjTransform, ProjError> {
    let a = frame_matrix(src)?;
    let b = frame_matrix(dst)?;
    ProjTransform::new(b.mul(&a.inverse().ok_or(ProjError::DegenerateFrame)?))
}

/// Row echelon form over ℤ with the matching multiplicative operations on `rhs`.
fn torus_echelon(e: &mut [Vec<i64>], rhs: &mut [FieldElement]) -> Vec<usize> {
    let rows = e.len();
    let cols = e.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows).filter(|&i| e[i][c] != 0).min_by_key(|&i| e[i][c].abs());
            let Some(p) = best else { break };
            e.swap(r, p);
            rhs.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if e[i][c] != 0 {
                    let q = e[i][c].div_euclid(e[r][c]);
                    for j in 0..cols {
                        e[i][j] -= q * e[r][j];
                    }
                    rhs[i] = &rhs[i] * &rhs[r].pow(-q);
                    if e[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if e.get(r).is_some_and(|row| row[c] != 0) {
            if e[r][c] < 0 {
                for x in e[r].iter_mut() {
                    *x = -*x;
                }
                rhs[r] = rhs[r].inv().unwrap();
            }
            pivots.push(c);
            r += 1;
        }
    }
    pivots
}

/// All projectivities P·D (D diagonal) preserving V(f) and sending e_i to e_{perm[i]}.
pub fn diagonal_lifts(f: &MultiPoly, perm: &[usize]) -> Result<Vec<ProjTransform>, ProjError> {
    let n = f.nvars();
    if perm.len() != n {
        return Err(ProjError::DimensionMismatch(perm.len(), n));
    }
    let p = ProjTransform::permutation(perm);
    let g = p.pullback(f);
    // f(PDx) = Σ g_m d^m x^m must equal λ·f
    let fm: Vec<_> = f.terms().iter().map(|t| t.0.clone()).collect();
    let gm: Vec<_> = g.terms().iter().map(|t| t.0.clone()).collect();
    let mut fs = fm.clone();
    let mut gs = gm.clone();
    fs.sort();
    gs.sort();
    if fs != gs {
        return Ok(Vec::new());
    }
    let (m0, f0) = &f.terms()[0];
    let g0 = g.coefficient(m0);
    let mut e: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<FieldElement> = Vec::new();
    for (m, fc) in f.terms().iter().skip(1) {
        let gc = g.coefficient(m);
        e.push((1..n).map(|i| m.exps()[i] as i64 - m0.exps()[i] as i64).collect());
        rhs.push(&(fc * &g0) * &(f0 * &gc).inv().unwrap());
    }
    let pivots = torus_echelon(&mut e, &mut rhs);
    for i in pivots.len()..e.len() {
        if !rhs[i].is_one() {
            return Ok(Vec::new());
        }
    }
    if pivots.len() < n - 1 {
        return Err(ProjError::PositiveDimensional);
    }
    let mut partial: Vec<Vec<FieldElement>> = vec![vec![FieldElement::zero(); n - 1]];
    for r in (0..pivots.len()).rev() {
        let c = pivots[r];
        let mut next = Vec::new();
        for d in &partial {
            let mut val = rhs[r].clone();
            for j in c + 1..n - 1 {
                if e[r][j] != 0 {
                    val = &val * &d[j].pow(-e[r][j]);
                }
            }
            let roots = val.kth_roots(e[r][c] as u32, LIFT_CONDUCTOR).ok_or(ProjError::UnsupportedRoot)?;
            for root in roots {
                let mut d2 = d.clone();
                d2[c] = root;
                next.push(d2);
            }
        }
        partial = next;
    }
    let mut out: Vec<ProjTransform> = Vec::new();
    for d in partial {
        let mut full = vec![FieldElement::one()];
        full.extend(d);
        let t = p.compose(&ProjTransform::diagonal(&full)?);
        if preserves(&t, f) && !out.contains(&t) {
            out.push(t);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, ParseContext};

    fn pt(v: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(v).unwrap()
    }

    fn j5(a: FieldElement) -> MultiPoly {
        let ctx = ParseContext::coords(5, 3);
        let base = parse_poly(
            "x0*x1*x2 + x1*x2*x3 + x2*x3*x4 + x3*x4*x0 + x4*x0*x1",
            &ctx,
        )
        .unwrap();
        let other = parse_poly("x0*x1*x3 + x1*x2*x4 + x2*x3*x0 + x3*x4*x1 + x4*x0*x2", &ctx).unwrap();
        base.add(&other.scale(&a))
    }

    #[test]
    fn points_normalize() {
        assert_eq!(pt(&[0, 2, 4]), pt(&[0, 1, 2]));
        assert_eq!(pt(&[-1, 1]).to_string(), "(1:-1)");
        assert!(ProjPoint::from_ints(&[0, 0]).is_err());
    }

    #[test]
    fn standard_frame_is_general() {
        let mut f: Vec<ProjPoint> = (0..5).map(|i| ProjPoint::coordinate(5, i)).collect();
        f.push(pt(&[1, 1, 1, 1, 1]));
        assert!(general_position(&f).is_ok());
        let bad = [pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0])];
        assert_eq!(general_position(&bad), Err(vec![0, 1, 2]));
    }

    #[test]
    fn frame_maps() {
        let mut f: Vec<ProjPoint> = (0..5).map(|i| ProjPoint::coordinate(5, i)).collect();
        f.push(pt(&[1, 1, 1, 1, 1]));
        assert!(frame_map(&f, &f).unwrap().is_identity());
        let pi = [2, 0, 1, 4, 3];
        let mut g: Vec<ProjPoint> = vec![ProjPoint::coordinate(5, 0); 5];
        for (i, &j) in pi.iter().enumerate() {
            g[i] = ProjPoint::coordinate(5, j);
        }
        g.push(f[5].clone());
        assert_eq!(frame_map(&f, &g).unwrap(), ProjTransform::permutation(&pi));
    }

    #[test]
    fn subspaces() {
        let l = LinearSubspace::span_points(&[pt(&[1, 0, 0]), pt(&[0, 1, 0])]);
        let (s, m) = span_meet(&l, &l);
        assert_eq!((s.clone(), m), (l.clone(), l.clone()));
        let a = LinearSubspace::span_points(&[pt(&[1, 0, 0])]);
        let b = LinearSubspace::span_points(&[pt(&[0, 1, 0])]);
        let (s, m) = span_meet(&a, &b);
        assert_eq!(s, l);
        assert_eq!(m.dim_proj(), -1);
    }

    #[test]
    fn plane_containment() {
        let ctx = ParseContext::coords(6, 1);
        let segre = parse_poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", &ctx).unwrap();
        let forms: Vec<MultiPoly> = ["x0 + x1", "x2 + x3", "x4 + x5"].iter().map(|s| parse_poly(s, &ctx).unwrap()).collect();
        let plane = LinearSubspace::from_forms(&forms).unwrap();
        assert!(plane_contained(&plane, &segre));
        let f = j5(FieldElement::one());
        let coord_plane = LinearSubspace::span_points(&[pt(&[1, 0, 0, 0, 0]), pt(&[0, 1, 0, 0, 0]), pt(&[0, 0, 1, 0, 0])]);
        assert!(!plane_contained(&coord_plane, &f));
    }

    #[test]
    fn preservation() {
        let f = j5(FieldElement::one());
        let shift = ProjTransform::permutation(&[1, 2, 3, 4, 0]);
        assert!(preserves(&shift, &f));
        let mut m = Matrix::identity(5);
        m.set(0, 1, FieldElement::one());
        assert!(!preserves(&ProjTransform::new(m).unwrap(), &f));
    }

    #[test]
    fn lifts_of_j5() {
        let a1 = j5(FieldElement::one());
        let b = j5(FieldElement::omega());
        let cyc = diagonal_lifts(&a1, &[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(cyc, vec![ProjTransform::permutation(&[1, 2, 3, 4, 0])]);
        // (2,3,5,4) in 1-indexed cycle notation
        let q = [0, 2, 4, 1, 3];
        assert_eq!(diagonal_lifts(&a1, &q).unwrap().len(), 1);
        assert!(diagonal_lifts(&b, &q).unwrap().is_empty());
        assert_eq!(diagonal_lifts(&a1, &[0, 1, 2, 3, 4]).unwrap(), vec![ProjTransform::identity(5)]);
    }

    #[test]
    fn induced_permutations() {
        let pts: Vec<ProjPoint> = (0..3).map(|i| ProjPoint::coordinate(3, i)).collect();
        let t = ProjTransform::permutation(&[1, 2, 0]);
        assert_eq!(t.induced_permutation(&pts), Some(vec![1, 2, 0]));
    }
}
