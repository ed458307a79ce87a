//! Singular loci of hypersurfaces and the type of each singular point.

use serde::Serialize;
use thiserror::Error;

use crate::arith::FieldElement;
use crate::ideal::{local_multiplicity, proj_dim_degree, radical_member, Budget, Ideal, IdealError};
use crate::linalg::Matrix;
use crate::poly::{Monomial, MultiPoly};
use crate::projective::ProjPoint;

/// Highest degree of forms tried when cutting out a finite point set.
pub const MAX_VANISHING_DEGREE: u32 = 6;

/// Truncation degree for the corank-one series reduction.
pub const SERIES_DEGREE: u32 = 12;

/// Lower bound on the degree of the dual of a cubic threefold.
pub const DUAL_DEGREE_FLOOR: i64 = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SingularError {
    #[error("claimed point {index} {point} is not singular")]
    SmoothPoint { index: usize, point: String },
    #[error("claimed points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("no forms of degree ≤ {0} cut out exactly the claimed points")]
    NoVanishingIdeal(u32),
    #[error("singular locus escapes the claimed set: {0} is not in the radical of the Jacobian ideal")]
    Escape(String),
    #[error("singular locus has projective dimension {0}")]
    PositiveDimensional(i32),
    #[error("point is not singular")]
    NotSingular,
    #[error("series reduction did not terminate below degree {0}")]
    DegreeBudget(u32),
    #[error("no generic hyperplane slice stabilized")]
    NoGenericSlice,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularLocusCertificate {
    pub variety: String,
    pub points: Vec<String>,
    /// Every claimed point zeroes the gradient.
    pub soundness: bool,
    pub vanishing_degree: u32,
    pub vanishing_generators: usize,
    /// Each generator of the vanishing ideal lies in the radical of the Jacobian ideal.
    pub completeness: bool,
    pub jacobian_dimension: i32,
    pub jacobian_degree: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SingularityType {
    A1,
    /// Corank one with vanishing order k+1 along the kernel direction.
    CA(u32),
    Other { corank: usize, order: u32 },
}

impl std::fmt::Display for SingularityType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularityType::A1 => f.write_str("A1"),
            SingularityType::CA(k) => write!(f, "cA{k}-class"),
            SingularityType::Other { corank, order } => write!(f, "other(corank {corank}, order {order})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub point: String,
    pub hessian_rank: usize,
    #[serde(rename = "type")]
    pub kind: SingularityType,
    pub mu: usize,
    pub mu_section: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualDegreeBudget {
    pub value: i64,
    pub feasible: bool,
}

fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    crate::ideal::monomials_of_degree(n, d)
}

/// Forms of degree d vanishing on every point.
pub fn vanishing_forms(points: &[ProjPoint], d: u32) -> Vec<MultiPoly> {
    let n = points[0].len();
    let mons = all_monomials(n, d);
    let rows: Vec<Vec<FieldElement>> = points
        .iter()
        .map(|p| mons.iter().map(|m| MultiPoly::monomial(m.clone(), FieldElement::one()).evaluate(p.coords())).collect())
        .collect();
    crate::linalg::nullspace_generic(&rows, mons.len())
        .into_iter()
        .map(|c| MultiPoly::from_terms(n, mons.iter().cloned().zip(c)))
        .collect()
}

/// Rational singular points with integer coordinates in [-h, h].
pub fn search_singular_points(f: &MultiPoly, h: i64) -> Vec<ProjPoint> {
    let n = f.nvars();
    let grad = f.gradient();
    let mut found: Vec<ProjPoint> = Vec::new();
    let side = (2 * h + 1) as usize;
    for code in 0..side.pow(n as u32) {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % side) as i64 - h;
                c /= side;
                d
            })
            .collect();
        // first nonzero coordinate positive
        match v.iter().find(|&&x| x != 0) {
            Some(&x) if x > 0 => {}
            _ => continue,
        }
        let pt: Vec<FieldElement> = v.iter().map(|&x| FieldElement::from_int(x)).collect();
        if grad.iter().all(|g| g.evaluate(&pt).is_zero()) {
            let p = ProjPoint::new(pt).expect("nonzero");
            if !found.contains(&p) {
                found.push(p);
            }
        }
    }
    found
}

/// Certifies that V(∇f) is exactly the claimed set of points.
pub fn certify_singular_locus(
    variety: &str,
    f: &MultiPoly,
    claimed: &[ProjPoint],
    budget: &Budget,
) -> Result<SingularLocusCertificate, SingularError> {
    for i in 0..claimed.len() {
        for j in 0..i {
            if claimed[i] == claimed[j] {
                return Err(SingularError::DuplicatePoint(j, i));
            }
        }
    }
    let grad = f.gradient();
    for (i, p) in claimed.iter().enumerate() {
        if grad.iter().any(|g| !g.evaluate(p.coords()).is_zero()) {
            return Err(SingularError::SmoothPoint { index: i, point: p.to_string() });
        }
    }
    let jac = Ideal::new(grad);
    let (jdim, jdeg) = proj_dim_degree(&jac, budget)?;
    if jdim > 0 {
        return Err(SingularError::PositiveDimensional(jdim));
    }
    let (vdeg, forms) = if claimed.is_empty() {
        (0, vec![MultiPoly::one(f.nvars())])
    } else {
        let mut found = None;
        for d in 1..=MAX_VANISHING_DEGREE {
            let forms = vanishing_forms(claimed, d);
            if forms.is_empty() {
                continue;
            }
            if proj_dim_degree(&Ideal::new(forms.clone()), budget)? == (0, Some(claimed.len() as u64)) {
                found = Some((d, forms));
                break;
            }
        }
        found.ok_or(SingularError::NoVanishingIdeal(MAX_VANISHING_DEGREE))?
    };
    for g in &forms {
        if !radical_member(g, &jac, budget)? {
            return Err(SingularError::Escape(g.to_string()));
        }
    }
    Ok(SingularLocusCertificate {
        variety: variety.to_string(),
        points: claimed.iter().map(ToString::to_string).collect(),
        soundness: true,
        vanishing_degree: vdeg,
        vanishing_generators: forms.len(),
        completeness: true,
        jacobian_dimension: jdim,
        jacobian_degree: jdeg,
    })
}

/// Local equation at p in the chart of its first nonzero coordinate, with p at the origin.
pub fn affine_chart(f: &MultiPoly, p: &ProjPoint) -> MultiPoly {
    let n = f.nvars();
    let k = p.coords().iter().position(|x| !x.is_zero()).unwrap();
    let mut images = Vec::with_capacity(n);
    let mut j = 0;
    for i in 0..n {
        if i == k {
            images.push(MultiPoly::constant(n - 1, p.coords()[k].clone()));
        } else {
            images.push(MultiPoly::var(n - 1, j).add(&MultiPoly::constant(n - 1, p.coords()[i].clone())));
            j += 1;
        }
    }
    f.compose(&images)
}

/// Hessian of h at the origin.
pub fn hessian_at_origin(h: &MultiPoly) -> Matrix {
    let n = h.nvars();
    let zero = vec![FieldElement::zero(); n];
    let rows = (0..n)
        .map(|i| (0..n).map(|j| h.derivative(i).derivative(j).evaluate(&zero)).collect())
        .collect();
    Matrix::new(rows)
}

/// Vanishing order along the kernel line of a corank-one critical point, if below the budget.
fn corank_one_order(h: &MultiPoly, hess: &Matrix) -> Option<u32> {
    let n = h.nvars();
    let v = hess.nullspace().pop()?;
    // basis: standard vectors completing v, then v last
    let mut cols: Vec<Vec<FieldElement>> = Vec::new();
    for i in 0..n {
        let mut e = vec![FieldElement::zero(); n];
        e[i] = FieldElement::one();
        let mut trial = cols.clone();
        trial.push(e.clone());
        trial.push(v.clone());
        if trial.len() <= n && Matrix::from_columns(&trial).rank() == trial.len() {
            cols.push(e);
        }
        if cols.len() == n - 1 {
            break;
        }
    }
    cols.push(v);
    let change = Matrix::from_columns(&cols);
    let g = h.substitute_matrix(&change).ok()?;
    let m = n - 1;
    let hq = hessian_at_origin(&g);
    let block = Matrix::new((0..m).map(|i| (0..m).map(|j| hq.get(i, j).clone()).collect()).collect());
    let binv = block.inverse()?;
    let z = MultiPoly::var(1, 0);
    let d = SERIES_DEGREE + 1;
    let mut y: Vec<MultiPoly> = vec![MultiPoly::zero(1); m];
    let grads: Vec<MultiPoly> = (0..m).map(|i| g.derivative(i)).collect();
    for _ in 0..=SERIES_DEGREE {
        let mut images = y.clone();
        images.push(z.clone());
        let resid: Vec<MultiPoly> = grads
            .iter()
            .enumerate()
            .map(|(i, gi)| {
                let lin = (0..m).fold(MultiPoly::zero(1), |acc, j| acc.add(&y[j].scale(block.get(i, j))));
                gi.compose(&images).sub(&lin).truncate(d)
            })
            .collect();
        y = (0..m)
            .map(|i| (0..m).fold(MultiPoly::zero(1), |acc, j| acc.sub(&resid[j].scale(binv.get(i, j)))))
            .collect();
    }
    let mut images = y;
    images.push(z);
    let phi = g.compose(&images).truncate(d);
    phi.order().filter(|&o| o <= SERIES_DEGREE)
}

/// μ of the hypersurface h at the origin.
fn milnor_at_origin(h: &MultiPoly, budget: &Budget) -> Result<usize, IdealError> {
    let zero = vec![FieldElement::zero(); h.nvars()];
    local_multiplicity(&Ideal::new(h.gradient()), &zero, budget)
}

/// μ of a hyperplane section through the origin, over slices (1, t, t², …) for t = 2, 3, 5, 7, …
fn milnor_of_slice(h: &MultiPoly, budget: &Budget) -> Result<usize, SingularError> {
    let n = h.nvars();
    let primes = [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29];
    let mut prev: Option<usize> = None;
    for &t in &primes {
        // y0 = −Σ_{i≥1} t^i·y_i
        let mut images = Vec::with_capacity(n);
        let mut y0 = MultiPoly::zero(n - 1);
        for i in 1..n {
            let c = FieldElement::from_int(-t.pow(i as u32));
            y0 = y0.add(&MultiPoly::var(n - 1, i - 1).scale(&c));
        }
        images.push(y0);
        for i in 1..n {
            images.push(MultiPoly::var(n - 1, i - 1));
        }
        let s = h.compose(&images);
        match milnor_at_origin(&s, budget) {
            Ok(mu) => {
                if prev == Some(mu) {
                    return Ok(mu);
                }
                prev = Some(mu);
            }
            Err(IdealError::NonIsolated(_)) => prev = None,
            Err(e) => return Err(e.into()),
        }
    }
    Err(SingularError::NoGenericSlice)
}

/// Type, Milnor number and section Milnor number of a singular point.
pub fn classify_singularity(f: &MultiPoly, p: &ProjPoint, budget: &Budget) -> Result<SingularityReport, SingularError> {
    if f.gradient().iter().any(|g| !g.evaluate(p.coords()).is_zero()) {
        return Err(SingularError::NotSingular);
    }
    let h = affine_chart(f, p);
    classify_local(&h, &p.to_string(), budget)
}

/// Classification of an affine hypersurface singular at the origin.
pub fn classify_local(h: &MultiPoly, label: &str, budget: &Budget) -> Result<SingularityReport, SingularError> {
    let n = h.nvars();
    let hess = hessian_at_origin(h);
    let rank = hess.rank();
    let kind = if rank == n {
        SingularityType::A1
    } else if rank + 1 == n {
        let o = corank_one_order(h, &hess).ok_or(SingularError::DegreeBudget(SERIES_DEGREE))?;
        SingularityType::CA(o - 1)
    } else {
        SingularityType::Other { corank: n - rank, order: h.order().unwrap_or(0) }
    };
    let mu = milnor_at_origin(h, budget)?;
    let mu_section = milnor_of_slice(h, budget)?;
    Ok(SingularityReport { point: label.to_string(), hessian_rank: rank, kind, mu, mu_section, m: mu + mu_section })
}

/// 24 − Σ m(p), feasible when at least 3.
pub fn dual_degree_budget(reports: &[SingularityReport]) -> DualDegreeBudget {
    let value = 24 - reports.iter().map(|r| r.m as i64).sum::<i64>();
    DualDegreeBudget { value, feasible: value >= DUAL_DEGREE_FLOOR }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, ParseContext};

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, &ParseContext::coords(n, 1)).unwrap()
    }

    fn j5a() -> MultiPoly {
        p("x0*x1*x2 + x0*x1*x3 + x0*x1*x4 + x0*x2*x3 + x0*x2*x4 + x0*x3*x4 + x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4", 5)
    }

    fn coordinate_points() -> Vec<ProjPoint> {
        (0..5).map(|i| ProjPoint::coordinate(5, i)).collect()
    }

    #[test]
    fn j5a_locus_is_certified() {
        let c = certify_singular_locus("J5a", &j5a(), &coordinate_points(), &Budget::default()).unwrap();
        assert_eq!(c.points.len(), 5);
        assert_eq!(c.jacobian_dimension, 0);
    }

    #[test]
    fn certification_rejects_mutations() {
        let b = Budget::default();
        let pts = coordinate_points();
        assert!(matches!(
            certify_singular_locus("J5a", &j5a(), &pts[..4], &b),
            Err(SingularError::Escape(_))
        ));
        let mut more = pts.clone();
        more.push(ProjPoint::from_ints(&[1, 1, 1, 1, 1]).unwrap());
        assert!(matches!(
            certify_singular_locus("J5a", &j5a(), &more, &b),
            Err(SingularError::SmoothPoint { index: 5, .. })
        ));
    }

    #[test]
    fn local_models() {
        let b = Budget::default();
        let a1 = classify_local(&p("x0^2 + x1^2 + x2^2 + x3^2", 4), "0", &b).unwrap();
        assert_eq!((a1.kind.clone(), a1.mu, a1.mu_section, a1.m), (SingularityType::A1, 1, 1, 2));
        let a2 = classify_local(&p("x0^2 + x1^2 + x2^2 + x3^3", 4), "0", &b).unwrap();
        assert_eq!(a2.kind, SingularityType::CA(2));
        assert_eq!(a2.mu, 2);
        assert_eq!(a2.hessian_rank, 3);
    }

    #[test]
    fn mixed_terms_are_eliminated() {
        // x0² + x0·x3² + x1² + x2² + x3³: the series step must see the x0·x3² coupling
        let h = p("x0^2 + x0*x3^2 + x1^2 + x2^2 + x3^3", 4);
        let r = classify_local(&h, "0", &Budget::default()).unwrap();
        assert_eq!(r.kind, SingularityType::CA(2));
        let h = p("x0^2 - 2*x0*x3^2 + x3^4 + x1^2 + x2^2 + x3^5", 4);
        let r = classify_local(&h, "0", &Budget::default()).unwrap();
        assert_eq!(r.kind, SingularityType::CA(4));
    }

    #[test]
    fn j5a_nodes_and_budget() {
        let b = Budget::default();
        let reports: Vec<_> = coordinate_points().iter().map(|q| classify_singularity(&j5a(), q, &b).unwrap()).collect();
        assert!(reports.iter().all(|r| r.kind == SingularityType::A1 && r.mu == 1));
        assert_eq!(dual_degree_budget(&reports), DualDegreeBudget { value: 14, feasible: true });
        assert_eq!(dual_degree_budget(&[]).value, 24);
    }
}
