//! Polynomial ideals: Buchberger's algorithm and the decisions built on it.

use std::cell::RefCell;
use std::cmp::Ordering;

use thiserror::Error;

use crate::arith::FieldElement;
use crate::poly::{Monomial, MultiPoly};

/// Default cap on S-pair reductions per Gröbner computation.
pub const DEFAULT_BUDGET: usize = 200_000;

/// Largest truncation degree tried by [`local_multiplicity`].
pub const MAX_TRUNCATION: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("Gröbner budget of {0} S-pair reductions exceeded")]
    BudgetExceeded(usize),
    #[error("empty generator list")]
    NoGenerators,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("point is not isolated: local quotient did not stabilize up to degree {0}")]
    NonIsolated(u32),
    #[error("point is not a zero of the ideal")]
    NotAZero,
}

/// Limits for a single Gröbner computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_reductions: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Ideal {
    pub generators: Vec<MultiPoly>,
    pub order: MonomialOrder,
}

impl Ideal {
    pub fn new(generators: Vec<MultiPoly>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { generators, order: MonomialOrder::Grevlex }
    }

    pub fn with_order(generators: Vec<MultiPoly>, order: MonomialOrder) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { generators, order }
    }

    pub fn nvars(&self) -> Option<usize> {
        self.generators.first().map(MultiPoly::nvars)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(MultiPoly::is_homogeneous)
    }

    pub fn extended(&self, more: impl IntoIterator<Item = MultiPoly>) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(more.into_iter().filter(|p| !p.is_zero()));
        Ideal { generators: g, order: self.order }
    }
}

/// Polynomial with terms sorted descending under a fixed order.
#[derive(Clone, Debug)]
struct OPoly {
    terms: Vec<(Monomial, FieldElement)>,
}

impl OPoly {
    fn from_poly(p: &MultiPoly, ord: MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if ord != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        OPoly { terms }
    }

    fn to_poly(&self, nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.inv().unwrap();
                for t in self.terms.iter_mut() {
                    t.1 = &t.1 * &inv;
                }
            }
        }
        self
    }

    /// self[from..] - c·m·g, merged under `ord`.
    fn sub_mul(&self, from: usize, c: &FieldElement, m: &Monomial, g: &OPoly, ord: MonomialOrder) -> OPoly {
        let a = &self.terms[from..];
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match ord.cmp(&a[i].0, &gm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(c * &g.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].1 - &(c * &g.terms[j].1);
                    if !v.is_zero() {
                        out.push((gm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &g.terms[j..] {
            out.push((t.0.mul(m), -(c * &t.1)));
        }
        OPoly { terms: out }
    }
}

/// Full reduction of f by monic g's.
fn reduce_full(f: OPoly, basis: &[OPoly], ord: MonomialOrder) -> OPoly {
    let mut rem: Vec<(Monomial, FieldElement)> = Vec::new();
    let mut p = f;
    let mut start = 0;
    while start < p.terms.len() {
        let (m, c) = &p.terms[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = m.div(g.lm());
                let c = c.clone();
                // the leading term cancels exactly
                let np = p.sub_mul(start + 1, &c, &q, &OPoly { terms: g.terms[1..].to_vec() }, ord);
                p = np;
                start = 0;
            }
            None => {
                rem.push(p.terms[start].clone());
                start += 1;
            }
        }
    }
    OPoly { terms: rem }
}

fn spoly(f: &OPoly, g: &OPoly, ord: MonomialOrder) -> OPoly {
    let l = f.lm().lcm(g.lm());
    let mf = l.div(f.lm());
    let mg = l.div(g.lm());
    let ff = OPoly { terms: f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect() };
    ff.sub_mul(0, &FieldElement::one(), &mg, &OPoly { terms: g.terms[1..].to_vec() }, ord)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    elements: Vec<MultiPoly>,
    order: MonomialOrder,
    nvars: usize,
}

thread_local! {
    static AUDIT: RefCell<Option<Vec<GroebnerBasis>>> = const { RefCell::new(None) };
}

/// Starts recording every Gröbner basis computed on this thread.
pub fn audit_start() {
    AUDIT.with(|a| *a.borrow_mut() = Some(Vec::new()));
}

/// Stops recording and returns what was recorded.
pub fn audit_take() -> Vec<GroebnerBasis> {
    AUDIT.with(|a| a.borrow_mut().take().unwrap_or_default())
}

fn audit_push(g: &GroebnerBasis) {
    AUDIT.with(|a| {
        if let Some(v) = a.borrow_mut().as_mut() {
            v.push(g.clone());
        }
    });
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].constant_value().is_some_and(|c| !c.is_zero())
    }

    fn opolys(&self) -> Vec<OPoly> {
        self.elements.iter().map(|e| OPoly::from_poly(e, self.order)).collect()
    }

    /// Leading monomials under the basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.opolys().iter().map(|p| p.lm().clone()).collect()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let basis = self.opolys();
        reduce_full(OPoly::from_poly(f, self.order), &basis, self.order).to_poly(f.nvars())
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks directly that every S-polynomial reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        let basis = self.opolys();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = spoly(&basis[i], &basis[j], self.order);
                if !reduce_full(s, &basis, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that elements are monic and no term of one is divisible by another's leading monomial.
    pub fn check_reduced(&self) -> bool {
        let basis = self.opolys();
        for (i, g) in basis.iter().enumerate() {
            if !g.terms[0].1.is_one() {
                return false;
            }
            for (j, h) in basis.iter().enumerate() {
                if i != j && g.terms.iter().any(|t| h.lm().divides(&t.0)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `ideal`.
pub fn groebner(ideal: &Ideal, budget: &Budget) -> Result<GroebnerBasis, IdealError> {
    let nvars = ideal.nvars().ok_or(IdealError::NoGenerators)?;
    let ord = ideal.order;
    let mut g: Vec<OPoly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut unit = false;

    let mut inputs: Vec<OPoly> = ideal.generators.iter().map(|p| OPoly::from_poly(p, ord).monic()).collect();
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    for f in inputs {
        let d = f.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        let h = reduce_full(f, &active_basis(&g, &active), ord);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            unit = true;
            break;
        }
        update(&mut g, &mut sugar, &mut active, &mut pairs, h, d);
    }

    let mut count = 0usize;
    while !unit && !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pr = pairs.swap_remove(best);
        count += 1;
        if count > budget.max_reductions {
            return Err(IdealError::BudgetExceeded(budget.max_reductions));
        }
        let s = spoly(&g[pr.i], &g[pr.j], ord);
        let h = reduce_full(s, &g, ord);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            unit = true;
            break;
        }
        update(&mut g, &mut sugar, &mut active, &mut pairs, h, pr.sugar);
    }

    let elements = if unit {
        vec![MultiPoly::one(nvars)]
    } else {
        let mut min: Vec<OPoly> = Vec::new();
        let cands: Vec<OPoly> = g.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p.clone()).collect();
        for (i, p) in cands.iter().enumerate() {
            let redundant = cands.iter().enumerate().any(|(j, q)| {
                j != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || j < i)
            });
            if !redundant {
                min.push(p.clone());
            }
        }
        let mut red = Vec::with_capacity(min.len());
        for i in 0..min.len() {
            let others: Vec<OPoly> = min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
            let head = OPoly { terms: vec![min[i].terms[0].clone()] };
            let tail = reduce_full(OPoly { terms: min[i].terms[1..].to_vec() }, &others, ord);
            let mut t = head.terms;
            t.extend(tail.terms);
            red.push(OPoly { terms: t });
        }
        red.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
        red.iter().map(|p| p.to_poly(nvars)).collect()
    };
    let gb = GroebnerBasis { elements, order: ord, nvars };
    audit_push(&gb);
    Ok(gb)
}

fn active_basis(g: &[OPoly], active: &[bool]) -> Vec<OPoly> {
    g.iter().zip(active).filter(|(_, a)| **a).map(|(p, _)| p.clone()).collect()
}

/// Gebauer–Möller installation of a new basis element.
fn update(g: &mut Vec<OPoly>, sugar: &mut Vec<u32>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: OPoly, s: u32) {
    let hk = g.len();
    let hm = h.lm().clone();
    let hdeg = hm.degree();
    let new_sugar = |i: usize, l: &Monomial, g: &[OPoly], sugar: &[u32]| -> u32 {
        let a = sugar[i] + l.degree() - g[i].lm().degree();
        let b = s + l.degree() - hdeg;
        a.max(b)
    };
    let cands: Vec<(usize, Monomial)> = (0..hk).filter(|&i| active[i]).map(|i| (i, hm.lcm(g[i].lm()))).collect();
    // chain criterion among the new pairs
    let mut keep: Vec<(usize, Monomial)> = Vec::new();
    for (idx, (i, l)) in cands.iter().enumerate() {
        let coprime = hm.coprime(g[*i].lm());
        let dominated = cands.iter().enumerate().any(|(jdx, (_, l2))| {
            jdx != idx && l2.divides(l) && (l2 != l || jdx < idx)
        });
        if coprime || !dominated {
            keep.push((*i, l.clone()));
        }
    }
    // product criterion
    let fresh: Vec<(usize, Monomial)> = keep.into_iter().filter(|(i, _)| !hm.coprime(g[*i].lm())).collect();
    // prune old pairs
    pairs.retain(|p| {
        let lij = &p.lcm;
        !(hm.divides(lij)
            && &hm.lcm(g[p.i].lm()) != lij
            && &hm.lcm(g[p.j].lm()) != lij)
    });
    for (i, l) in fresh {
        let sg = new_sugar(i, &l, g, sugar);
        pairs.push(Pair { i, j: hk, lcm: l, sugar: sg });
    }
    for i in 0..hk {
        if active[i] && hm.divides(g[i].lm()) {
            active[i] = false;
        }
    }
    g.push(h);
    sugar.push(s);
    active.push(true);
}

/// True iff g lies in the radical of I (Rabinowitsch: 1 ∈ I + ⟨1 − t·g⟩).
pub fn radical_member(g: &MultiPoly, ideal: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
    if g.is_zero() {
        return Ok(true);
    }
    let n = g.nvars();
    let t = MultiPoly::var(n + 1, n);
    let rab = MultiPoly::one(n + 1).sub(&t.mul(&g.extend_vars(1)));
    let mut gens: Vec<MultiPoly> = ideal.generators.iter().map(|p| p.extend_vars(1)).collect();
    gens.push(rab);
    let gb = groebner(&Ideal::with_order(gens, MonomialOrder::Grevlex), budget)?;
    Ok(gb.is_unit())
}

/// Numerator N(t) of the Hilbert series N(t)/(1−t)ⁿ of k[x]/⟨gens⟩ for monomial generators.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    fn minimalize(mut v: Vec<Monomial>) -> Vec<Monomial> {
        v.sort_by_key(|m| m.degree());
        let mut out: Vec<Monomial> = Vec::new();
        for m in v {
            if !out.iter().any(|o| o.divides(&m)) {
                out.push(m);
            }
        }
        out
    }
    fn sub_shift(a: &mut Vec<i64>, b: &[i64], shift: usize) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, 0);
        }
        for (k, x) in b.iter().enumerate() {
            a[k + shift] -= x;
        }
    }
    fn rec(gens: Vec<Monomial>) -> Vec<i64> {
        let gens = minimalize(gens);
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(Monomial::is_one) {
            return vec![0];
        }
        let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
        if pairwise_coprime {
            let mut acc = vec![1i64];
            for m in &gens {
                let d = m.degree() as usize;
                let mut next = acc.clone();
                sub_shift(&mut next, &acc, d);
                acc = next;
            }
            return acc;
        }
        let mut rest = gens;
        let last = rest.pop().unwrap();
        let mut acc = rec(rest.clone());
        let quot: Vec<Monomial> = rest.iter().map(|m| m.div(&m.gcd(&last))).collect();
        let q = rec(quot);
        sub_shift(&mut acc, &q, last.degree() as usize);
        acc
    }
    let mut n = rec(gens.to_vec());
    while n.len() > 1 && *n.last().unwrap() == 0 {
        n.pop();
    }
    n
}

/// Projective dimension and degree of V(I) for homogeneous I; (-1, None) for the empty locus.
pub fn proj_dim_degree(ideal: &Ideal, budget: &Budget) -> Result<(i32, Option<u64>), IdealError> {
    if !ideal.is_homogeneous() {
        return Err(IdealError::NotHomogeneous);
    }
    let n = ideal.nvars().ok_or(IdealError::NoGenerators)?;
    let gb = groebner(&Ideal::with_order(ideal.generators.clone(), MonomialOrder::Grevlex), budget)?;
    if gb.is_unit() {
        return Ok((-1, None));
    }
    let mut num = hilbert_numerator(&gb.leading_monomials());
    let mut k = 0;
    // divide by (1 - t) while it divides
    while num.iter().sum::<i64>() == 0 && num.iter().any(|&x| x != 0) {
        let mut q = vec![0i64; num.len() - 1];
        let mut carry = 0i64;
        for (i, slot) in q.iter_mut().enumerate() {
            carry += num[i];
            *slot = carry;
        }
        num = q;
        k += 1;
    }
    let krull = n as i32 - k;
    if krull <= 0 {
        return Ok((-1, None));
    }
    let deg: i64 = num.iter().sum();
    Ok((krull - 1, Some(deg as u64)))
}

/// All monomials in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d as u16);
            out.push(Monomial::from_exps(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Multiplicity of the ideal at an affine point: dim k[x]/(I + mᴺ) at stabilization.
pub fn local_multiplicity(ideal: &Ideal, p: &[FieldElement], budget: &Budget) -> Result<usize, IdealError> {
    let n = ideal.nvars().ok_or(IdealError::NoGenerators)?;
    assert_eq!(p.len(), n);
    if ideal.generators.iter().any(|g| !g.evaluate(p).is_zero()) {
        return Err(IdealError::NotAZero);
    }
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::var(n, i).add(&MultiPoly::constant(n, p[i].clone())))
        .collect();
    let shifted: Vec<MultiPoly> = ideal.generators.iter().map(|g| g.compose(&images)).collect();
    let mut prev: Option<usize> = None;
    for big_n in 1..=MAX_TRUNCATION {
        let mut gens: Vec<MultiPoly> = shifted.iter().map(|g| g.truncate(big_n)).filter(|g| !g.is_zero()).collect();
        gens.extend(monomials_of_degree(n, big_n).into_iter().map(|m| MultiPoly::monomial(m, FieldElement::one())));
        let gb = groebner(&Ideal::new(gens), budget)?;
        let lms = gb.leading_monomials();
        let dim: usize = (0..big_n)
            .map(|d| monomials_of_degree(n, d).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count())
            .sum();
        if prev == Some(dim) {
            return Ok(dim);
        }
        prev = Some(dim);
    }
    Err(IdealError::NonIsolated(MAX_TRUNCATION))
}

/// True iff I and J agree set-theoretically off V(s): every generator g of one
/// side satisfies g·s ∈ √(other side).
pub fn saturated_equal(i: &Ideal, j: &Ideal, s: &MultiPoly, budget: &Budget) -> Result<bool, IdealError> {
    for g in &i.generators {
        if !radical_member(&g.mul(s), j, budget)? {
            return Ok(false);
        }
    }
    for g in &j.generators {
        if !radical_member(&g.mul(s), i, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff g lies in I.
pub fn ideal_member(g: &MultiPoly, ideal: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
    if ideal.generators.is_empty() {
        return Ok(g.is_zero());
    }
    Ok(groebner(ideal, budget)?.contains(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, ParseContext};

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, &ParseContext::coords(n, 1)).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn already_reduced() {
        let gb = groebner(&Ideal::new(vec![p("x0", 2), p("x1", 2)]), &b()).unwrap();
        assert_eq!(gb.elements(), &[p("x1", 2), p("x0", 2)]);
    }

    #[test]
    fn unit_ideal() {
        let gb = groebner(&Ideal::new(vec![p("x0*x1 - 1", 2), p("x0^2", 2)]), &b()).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn normal_forms() {
        let gb = groebner(&Ideal::new(vec![p("x0", 2), p("x1", 2)]), &b()).unwrap();
        assert_eq!(gb.normal_form(&MultiPoly::one(2)), MultiPoly::one(2));
        let gb = groebner(&Ideal::new(vec![p("x0", 1)]), &b()).unwrap();
        assert!(gb.normal_form(&p("x0^2", 1)).is_zero());
    }

    #[test]
    fn radical_membership() {
        assert!(radical_member(&p("x0", 2), &Ideal::new(vec![p("x0^2", 2)]), &b()).unwrap());
        assert!(!radical_member(&p("x1", 2), &Ideal::new(vec![p("x0", 2)]), &b()).unwrap());
    }

    #[test]
    fn dimension_and_degree() {
        let all: Vec<MultiPoly> = (0..5).map(|i| MultiPoly::var(5, i)).collect();
        assert_eq!(proj_dim_degree(&Ideal::new(all), &b()).unwrap(), (-1, None));
        let q = p("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", 5);
        assert_eq!(proj_dim_degree(&Ideal::new(vec![q]), &b()).unwrap(), (3, Some(2)));
        let twisted = Ideal::new(vec![p("x0*x2 - x1^2", 4), p("x1*x3 - x2^2", 4), p("x0*x3 - x1*x2", 4)]);
        assert_eq!(proj_dim_degree(&twisted, &b()).unwrap(), (1, Some(3)));
    }

    #[test]
    fn milnor_numbers_of_models() {
        let zero = vec![FieldElement::zero(); 4];
        let a1 = p("x0^2 + x1^2 + x2^2 + x3^2", 4);
        let a2 = p("x0^2 + x1^2 + x2^2 + x3^3", 4);
        assert_eq!(local_multiplicity(&Ideal::new(a1.gradient()), &zero, &b()).unwrap(), 1);
        assert_eq!(local_multiplicity(&Ideal::new(a2.gradient()), &zero, &b()).unwrap(), 2);
        let nonisolated = p("x0^2 + x1^2", 4);
        assert!(matches!(
            local_multiplicity(&Ideal::new(nonisolated.gradient()), &zero, &b()),
            Err(IdealError::NonIsolated(_))
        ));
    }

    #[test]
    fn saturation() {
        let i = Ideal::new(vec![p("x0*x1", 2)]);
        let j = Ideal::new(vec![p("x1", 2)]);
        assert!(saturated_equal(&i, &j, &p("x0", 2), &b()).unwrap());
        assert!(saturated_equal(&i, &i, &p("x0 + 1", 2), &b()).unwrap());
        assert!(!saturated_equal(&i, &j, &MultiPoly::one(2), &b()).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let gens = vec![p("x0*x1 - x2^2", 3), p("x1*x2 - x0^2", 3), p("x0*x2 - x1^2 + 1", 3)];
        let r = groebner(&Ideal::new(gens), &Budget { max_reductions: 2 });
        assert_eq!(r, Err(IdealError::BudgetExceeded(2)));
    }

    #[test]
    fn lex_basis_triangular() {
        let gens = vec![p("x0^2 + x1^2 - 2", 2), p("x0 - x1", 2)];
        let gb = groebner(&Ideal::with_order(gens, MonomialOrder::Lex), &b()).unwrap();
        assert!(gb.check_s_pairs());
        assert!(gb.elements().iter().any(|e| *e == p("x1^2 - 1", 2)));
    }
}
