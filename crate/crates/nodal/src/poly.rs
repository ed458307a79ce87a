//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept sorted in descending graded reverse lexicographic order, so
//! the leading term is always the first one.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

use crate::arith::{FieldElement, Rational};
use crate::linalg::Matrix;

pub type Exp = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: form has {form} variables, transform acts on {transform}")]
    DimensionMismatch { form: usize, transform: usize },
}

/// Exponent vector. Ordered by grevlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[Exp; 8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exps(e: &[Exp]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn exps(&self) -> &[Exp] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// self / o, assuming o divides self.
    pub fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, o: &Monomial) -> Ordering {
        let (da, db) = (self.degree(), o.degree());
        if da != db {
            return da.cmp(&db);
        }
        for (a, b) in self.0.iter().zip(o.0.iter()).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// Pure lexicographic comparison with x0 > x1 > ...
    pub fn cmp_lex(&self, o: &Monomial) -> Ordering {
        self.0.cmp(&o.0)
    }

    pub fn set(&mut self, i: usize, e: Exp) {
        self.0[i] = e;
    }

    pub fn extend(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }

    /// Splits into the first `k` exponents and the rest.
    pub fn split(&self, k: usize) -> (Monomial, Monomial) {
        (Monomial::from_exps(&self.0[..k]), Monomial::from_exps(&self.0[k..]))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_grevlex(o)
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{}", i)).collect()
}

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(Monomial, FieldElement)>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_names(self.nvars)))
    }
}

fn needs_parens(c: &FieldElement) -> bool {
    c.term_count() > 1
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly { nvars, terms: vec![(Monomial::one(nvars), c)] }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, FieldElement::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        MultiPoly { nvars, terms: vec![(Monomial::var(nvars, i), FieldElement::one())] }
    }

    pub fn monomial(m: Monomial, c: FieldElement) -> Self {
        let n = m.nvars();
        if c.is_zero() {
            return Self::zero(n);
        }
        MultiPoly { nvars: n, terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(x) => *x = &*x + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, FieldElement)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElement)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => FieldElement::zero(),
        }
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i32 {
        self.terms.iter().map(|t| t.0.degree() as i32).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|t| t.0.degree() == d)
            }
        }
    }

    pub fn constant_value(&self) -> Option<FieldElement> {
        match self.terms.as_slice() {
            [] => Some(FieldElement::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn conductor(&self) -> u32 {
        crate::arith::common_conductor(self.terms.iter().map(|t| &t.1))
    }

    fn merge(&self, o: &MultiPoly, neg: bool) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match self.terms[i].0.cmp(&o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if neg { -&o.terms[j].1 } else { o.terms[j].1.clone() };
                    out.push((o.terms[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if neg { &self.terms[i].1 - &o.terms[j].1 } else { &self.terms[i].1 + &o.terms[j].1 };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for t in &o.terms[j..] {
            let c = if neg { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MultiPoly { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.merge(o, true)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &FieldElement) -> MultiPoly {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// Multiplies by c·m; order is preserved since grevlex is a monomial order.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars, "ring mismatch");
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.nvars);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let m = a.mul(b);
                let p = x * y;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().unwrap()),
        }
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.nvars, "dimension mismatch");
        let mut cache: Vec<Vec<FieldElement>> = point.iter().map(|p| vec![FieldElement::one(), p.clone()]).collect();
        let mut acc = FieldElement::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap() * &point[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exps()[i];
            if e == 0 {
                return None;
            }
            let mut m2 = m.clone();
            m2.set(i, e - 1);
            Some((m2, c * &FieldElement::from_int(e as i64)))
        });
        Self::from_terms(self.nvars, terms)
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    /// Substitutes xᵢ ↦ images[i]; the result lives in the ring of the images.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars, "dimension mismatch");
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
                if t.is_zero() {
                    break;
                }
            }
            for (mm, cc) in t.terms {
                match acc.get_mut(&mm) {
                    Some(v) => *v = &*v + &cc,
                    None => {
                        acc.insert(mm, cc);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { nvars: target, terms }
    }

    /// f(M·x): each xᵢ becomes Σⱼ M[i][j]·xⱼ.
    pub fn substitute_matrix(&self, m: &Matrix) -> Result<MultiPoly, PolyError> {
        if m.nrows() != self.nvars || m.ncols() != self.nvars {
            return Err(PolyError::DimensionMismatch { form: self.nvars, transform: m.nrows() });
        }
        let n = self.nvars;
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| MultiPoly::linear(&m.rows()[i]))
            .collect();
        Ok(self.compose(&images))
    }

    /// Σ cᵢ·xᵢ.
    pub fn linear(coeffs: &[FieldElement]) -> MultiPoly {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(j, c)| (Monomial::var(n, j), c.clone())))
    }

    /// Coefficient vector of a linear form.
    pub fn linear_coeffs(&self) -> Option<Vec<FieldElement>> {
        let mut v = vec![FieldElement::zero(); self.nvars];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.exps().iter().position(|&e| e == 1).unwrap();
            v[i] = c.clone();
        }
        Some(v)
    }

    /// Appends `extra` variables after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    /// Moves variable i to position map[i] in a ring with `target` variables.
    pub fn remap_vars(&self, map: &[usize], target: usize) -> MultiPoly {
        Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0 as Exp; target];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exps(&e), c.clone())
            }),
        )
    }

    /// Drops all terms of total degree ≥ d.
    pub fn truncate(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|t| t.0.degree() < d).cloned().collect(),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|t| t.0.degree() == d).cloned().collect(),
        }
    }

    /// Lowest total degree present; None for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).min()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.as_rational().is_some_and(|q| q < &Rational::from_integer(0.into()));
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let cs = if needs_parens(&abs) { format!("({})", abs) } else { abs.to_string() };
            if m.is_one() {
                s.push_str(&cs);
            } else if abs.is_one() {
                s.push_str(&m.fmt_with(names));
            } else {
                s.push_str(&cs);
                s.push('*');
                s.push_str(&m.fmt_with(names));
            }
        }
        s
    }
}

/// Returns λ with g = λ·f, if it exists. By convention (0, 0) gives λ = 1.
pub fn proportionality(f: &MultiPoly, g: &MultiPoly) -> Option<FieldElement> {
    if f.is_zero() {
        return if g.is_zero() { Some(FieldElement::one()) } else { None };
    }
    if f.len() != g.len() {
        return None;
    }
    let (m0, c0) = &f.terms[0];
    if g.terms[0].0 != *m0 {
        return None;
    }
    let lambda = &g.terms[0].1 * &c0.inv().unwrap();
    for ((a, x), (b, y)) in f.terms.iter().zip(&g.terms) {
        if a != b || &(x * &lambda) != y {
            return None;
        }
    }
    Some(lambda)
}

/// A form whose coefficients are polynomials in parameters with rational coefficients.
///
/// Stored as one polynomial over the combined ring: the first `ncoords`
/// variables are coordinates, the rest are parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamForm {
    pub poly: MultiPoly,
    pub ncoords: usize,
    pub params: Vec<String>,
}

impl ParamForm {
    pub fn new(poly: MultiPoly, ncoords: usize, params: Vec<String>) -> Self {
        assert_eq!(poly.nvars(), ncoords + params.len());
        ParamForm { poly, ncoords, params }
    }

    /// A parameter-free form viewed as parametric with no parameters.
    pub fn constant(poly: MultiPoly) -> Self {
        let n = poly.nvars();
        ParamForm { poly, ncoords: n, params: Vec::new() }
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn names(&self) -> Vec<String> {
        let mut v = default_names(self.ncoords);
        v.extend(self.params.iter().cloned());
        v
    }

    /// Groups terms by coordinate monomial; values are polynomials in the parameters.
    pub fn coefficient_map(&self) -> BTreeMap<Monomial, MultiPoly> {
        let np = self.nparams();
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, FieldElement)>> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let (xm, pm) = m.split(self.ncoords);
            groups.entry(xm).or_default().push((pm, c.clone()));
        }
        groups.into_iter().map(|(k, v)| (k, MultiPoly::from_terms(np, v))).collect()
    }

    /// Embeds a parameter polynomial into the combined ring.
    pub fn lift_param(&self, p: &MultiPoly) -> MultiPoly {
        let map: Vec<usize> = (0..p.nvars()).map(|i| self.ncoords + i).collect();
        p.remap_vars(&map, self.poly.nvars())
    }

    /// The linear coordinate form Σ cᵢxᵢ in the combined ring, with coefficients in the parameters.
    pub fn coord_var(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.poly.nvars(), i)
    }

    pub fn param_var(&self, j: usize) -> MultiPoly {
        MultiPoly::var(self.poly.nvars(), self.ncoords + j)
    }

    /// Substitutes coordinates by combined-ring images, parameters fixed.
    pub fn compose_coords(&self, images: &[MultiPoly]) -> ParamForm {
        assert_eq!(images.len(), self.ncoords);
        let mut all = images.to_vec();
        for j in 0..self.nparams() {
            all.push(self.param_var(j));
        }
        ParamForm { poly: self.poly.compose(&all), ncoords: self.ncoords, params: self.params.clone() }
    }

    /// f(M·x) for a matrix with entries in the base field.
    pub fn substitute_matrix(&self, m: &Matrix) -> Result<ParamForm, PolyError> {
        if m.nrows() != self.ncoords {
            return Err(PolyError::DimensionMismatch { form: self.ncoords, transform: m.nrows() });
        }
        let total = self.poly.nvars();
        let images: Vec<MultiPoly> = (0..self.ncoords)
            .map(|i| {
                MultiPoly::from_terms(
                    total,
                    (0..self.ncoords).map(|j| (Monomial::var(total, j), m.get(i, j).clone())),
                )
            })
            .collect();
        Ok(self.compose_coords(&images))
    }

    /// Specializes all parameters to field values.
    pub fn specialize(&self, values: &[FieldElement]) -> MultiPoly {
        assert_eq!(values.len(), self.nparams());
        let n = self.ncoords;
        let mut images: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
        images.extend(values.iter().map(|v| MultiPoly::constant(n, v.clone())));
        self.poly.compose(&images)
    }

    /// Partially specializes parameters: `values[j] = Some(v)` fixes parameter j.
    pub fn fix_params(&self, values: &[Option<FieldElement>]) -> ParamForm {
        let keep: Vec<usize> = (0..self.nparams()).filter(|&j| values[j].is_none()).collect();
        let total = self.ncoords + keep.len();
        let mut images: Vec<MultiPoly> = (0..self.ncoords).map(|i| MultiPoly::var(total, i)).collect();
        let mut next = self.ncoords;
        for v in values {
            match v {
                Some(x) => images.push(MultiPoly::constant(total, x.clone())),
                None => {
                    images.push(MultiPoly::var(total, next));
                    next += 1;
                }
            }
        }
        ParamForm {
            poly: self.poly.compose(&images),
            ncoords: self.ncoords,
            params: keep.iter().map(|&j| self.params[j].clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for ParamForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.fmt_with(&self.names()))
    }
}

/// All 2×2 minors of the coefficient matrix of f and g over their joint support.
///
/// Their common vanishing at a parameter point where f ≠ 0 is equivalent to
/// g being proportional to f there.
pub fn coefficient_conditions(f: &ParamForm, g: &ParamForm) -> Vec<MultiPoly> {
    assert_eq!(f.ncoords, g.ncoords);
    assert_eq!(f.params, g.params);
    let np = f.nparams();
    let cf = f.coefficient_map();
    let cg = g.coefficient_map();
    let mut support: Vec<&Monomial> = cf.keys().chain(cg.keys()).collect();
    support.sort();
    support.dedup();
    let zero = MultiPoly::zero(np);
    let col = |m: &Monomial| (cf.get(m).unwrap_or(&zero).clone(), cg.get(m).unwrap_or(&zero).clone());
    let cols: Vec<(MultiPoly, MultiPoly)> = support.iter().map(|m| col(m)).collect();
    let mut out = Vec::new();
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let minor = cols[i].0.mul(&cols[j].1).sub(&cols[j].0.mul(&cols[i].1));
            if !minor.is_zero() && !out.contains(&minor) {
                out.push(minor);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn grevlex_order() {
        let a = Monomial::from_exps(&[1, 0, 1]);
        let b = Monomial::from_exps(&[0, 2, 0]);
        // same degree, last differing exponent: a has 1, b has 0 in x2 → a smaller
        assert_eq!(a.cmp(&b), Ordering::Less);
        let c = Monomial::from_exps(&[2, 0, 0]);
        assert!(c > b);
        assert!(Monomial::from_exps(&[0, 0, 3]) > c.div(&Monomial::var(3, 0)));
    }

    #[test]
    fn gradient_of_cube() {
        let f = x(5, 0).pow(3);
        let g = f.gradient();
        assert_eq!(g[0], x(5, 0).pow(2).scale(&FieldElement::from_int(3)));
        assert!(g[1..].iter().all(MultiPoly::is_zero));
        assert!(MultiPoly::constant(5, FieldElement::from_int(7)).gradient().iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn proportional_forms() {
        let f = x(3, 0).mul(&x(3, 1)).add(&x(3, 2).pow(2));
        let g = f.scale(&FieldElement::from_int(3));
        assert_eq!(proportionality(&f, &g), Some(FieldElement::from_int(3)));
        assert_eq!(proportionality(&f, &f.add(&x(3, 0).pow(2))), None);
        assert_eq!(proportionality(&MultiPoly::zero(3), &MultiPoly::zero(3)), Some(FieldElement::one()));
    }

    #[test]
    fn identity_substitution() {
        let f = x(3, 0).mul(&x(3, 1)).add(&x(3, 2).pow(3));
        assert_eq!(f.substitute_matrix(&Matrix::identity(3)).unwrap(), f);
        assert!(f.substitute_matrix(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn evaluation_at_origin() {
        let f = x(3, 0).mul(&x(3, 1)).mul(&x(3, 2));
        assert!(f.evaluate(&vec![FieldElement::zero(); 3]).is_zero());
    }

    #[test]
    fn minors_of_identical_forms_vanish() {
        let f = ParamForm::new(x(3, 0).mul(&x(3, 2)).add(&x(3, 1)), 1, vec!["a".into(), "b".into()]);
        assert!(coefficient_conditions(&f, &f).is_empty());
    }
}
