//! Exact scalars: rationals and elements of cyclotomic fields Q(ζₙ).
//!
//! A [`FieldElement`] is stored at its minimal conductor, as the reduced
//! residue modulo the cyclotomic polynomial Φₙ. Two elements are equal as
//! field values exactly when their stored representations coincide.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Largest conductor the library will build. Keeps the dense representation small.
pub const MAX_CONDUCTOR: u32 = 420;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the supported bound")]
    ConductorTooLarge(u64),
}

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug)]
struct Cyclo {
    n: u32,
    phi: usize,
    /// Φₙ, low degree first, monic.
    poly: Vec<BigInt>,
    /// Prime divisors of n.
    primes: Vec<u32>,
}

fn cyclo_cache() -> &'static RwLock<HashMap<u32, Arc<Cyclo>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Cyclo>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
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

pub fn euler_phi(n: u32) -> usize {
    let mut r = n as u64;
    for p in prime_factors(n) {
        r = r / p as u64 * (p as u64 - 1);
    }
    r as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

fn cyclo(n: u32) -> Arc<Cyclo> {
    if let Some(c) = cyclo_cache().read().unwrap().get(&n) {
        return c.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let c = cyclo(d);
            num = poly_div_exact(&num, &c.poly);
        }
    }
    let c = Arc::new(Cyclo {
        n,
        phi: num.len() - 1,
        poly: num,
        primes: prime_factors(n),
    });
    cyclo_cache().write().unwrap().insert(n, c.clone());
    c
}

/// Reduces a coefficient vector in powers of ζₙ (any length) to the residue modulo Φₙ.
fn reduce(c: &Cyclo, raw: Vec<Rational>) -> Vec<Rational> {
    let n = c.n as usize;
    let mut folded = vec![Rational::zero(); n.max(1)];
    for (k, v) in raw.into_iter().enumerate() {
        if !v.is_zero() {
            folded[k % n] += v;
        }
    }
    let phi = c.phi;
    for k in (phi..folded.len()).rev() {
        if folded[k].is_zero() {
            continue;
        }
        let lead = std::mem::replace(&mut folded[k], Rational::zero());
        let base = k - phi;
        for (j, pj) in c.poly[..phi].iter().enumerate() {
            if !pj.is_zero() {
                folded[base + j] -= &lead * Rational::from_integer(pj.clone());
            }
        }
    }
    folded.truncate(phi);
    folded
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(Rational),
    Cyc { n: u32, c: Box<[Rational]> },
}

/// Exact element of Q or of a cyclotomic field Q(ζₙ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The four field operations accepted by [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(a: &FieldElement, b: &FieldElement, op: Op) -> Result<FieldElement, ArithError> {
    Ok(match op {
        Op::Add => a + b,
        Op::Sub => a - b,
        Op::Mul => a * b,
        Op::Div => a.checked_div(b)?,
    })
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement(Repr::Rat(Rational::zero()))
    }

    pub fn one() -> Self {
        FieldElement(Repr::Rat(Rational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement(Repr::Rat(rat_int(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        FieldElement(Repr::Rat(q))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        FieldElement(Repr::Rat(rat(n, d)))
    }

    /// ζₙᵏ.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::canonicalize(raw, n)
    }

    /// The primitive cube root of unity ζ₃.
    pub fn omega() -> Self {
        Self::root_of_unity(3, 1)
    }

    /// Canonical element for Σ raw[k]·ζₙᵏ.
    pub fn canonicalize(raw: Vec<Rational>, n: u32) -> Self {
        assert!(n >= 1);
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let m = n / 2;
            let h = m.div_ceil(2) as usize;
            let mut out = vec![Rational::zero(); m as usize];
            for (k, v) in raw.into_iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let idx = (k * h) % m as usize;
                if k % 2 == 0 {
                    out[idx] += v;
                } else {
                    out[idx] -= v;
                }
            }
            return Self::canonicalize(out, m);
        }
        if n == 1 {
            let s = raw.into_iter().fold(Rational::zero(), |acc, v| acc + v);
            return FieldElement(Repr::Rat(s));
        }
        let c = cyclo(n);
        let v = reduce(&c, raw);
        Self::demote(n, v)
    }

    fn demote(n: u32, v: Vec<Rational>) -> Self {
        if v.iter().skip(1).all(Zero::is_zero) {
            return FieldElement(Repr::Rat(v.into_iter().next().unwrap_or_else(Rational::zero)));
        }
        let c = cyclo(n);
        if c.primes.len() == 1 {
            let p = c.primes[0];
            if n > p && n.is_multiple_of(p * p) {
                // prime power: the subfield Q(ζ_{n/p}) uses only exponents divisible by p
                if v.iter().enumerate().all(|(k, x)| k % p as usize == 0 || x.is_zero()) {
                    let sub: Vec<Rational> = v.into_iter().step_by(p as usize).collect();
                    return Self::demote(n / p, sub);
                }
            }
            return FieldElement(Repr::Cyc { n, c: v.into_boxed_slice() });
        }
        for d in divisors(n) {
            if d == 1 || d == n || d % 4 == 2 {
                continue;
            }
            if let Some(sub) = subfield_coords(n, d, &v) {
                return Self::demote(d, sub);
            }
        }
        FieldElement(Repr::Cyc { n, c: v.into_boxed_slice() })
    }

    /// Minimal conductor of the element (1 for rationals).
    pub fn conductor(&self) -> u32 {
        match &self.0 {
            Repr::Rat(_) => 1,
            Repr::Cyc { n, .. } => *n,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Cyc { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Repr::Rat(_))
    }

    /// Coefficients in the power basis of Q(ζₘ) for a multiple m of the conductor.
    pub fn embed(&self, m: u32) -> Vec<Rational> {
        let m = if m % 4 == 2 { m / 2 } else { m };
        let phi = euler_phi(m);
        match &self.0 {
            Repr::Rat(q) => {
                let mut v = vec![Rational::zero(); phi];
                v[0] = q.clone();
                v
            }
            Repr::Cyc { n, c } => {
                assert!(m % n == 0, "cannot embed conductor {} into {}", n, m);
                if *n == m {
                    return c.to_vec();
                }
                let step = (m / n) as usize;
                let mut raw = vec![Rational::zero(); step * c.len()];
                for (k, x) in c.iter().enumerate() {
                    raw[k * step] = x.clone();
                }
                reduce(&cyclo(m), raw)
            }
        }
    }

    fn binop(&self, other: &Self, f: impl Fn(&[Rational], &[Rational], &Cyclo) -> Vec<Rational>) -> Self {
        let n = lcm(self.conductor(), other.conductor());
        let c = cyclo(n);
        let a = self.embed(n);
        let b = other.embed(n);
        Self::demote(n, f(&a, &b, &c))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self * &other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        match &self.0 {
            Repr::Rat(q) => {
                if q.is_zero() {
                    Err(ArithError::DivisionByZero)
                } else {
                    Ok(FieldElement(Repr::Rat(q.recip())))
                }
            }
            Repr::Cyc { n, c } => {
                // solve a·x = 1 with the multiplication matrix of a
                let cy = cyclo(*n);
                let phi = cy.phi;
                let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi);
                for j in 0..phi {
                    let mut raw = vec![Rational::zero(); phi + j];
                    for (k, x) in c.iter().enumerate() {
                        raw[k + j] = x.clone();
                    }
                    cols.push(reduce(&cy, raw));
                }
                let mut m: Vec<Vec<Rational>> = (0..phi)
                    .map(|i| {
                        let mut row: Vec<Rational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                        row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                        row
                    })
                    .collect();
                let x = solve_square(&mut m).ok_or(ArithError::DivisionByZero)?;
                Ok(Self::demote(*n, x))
            }
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = FieldElement::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under the Galois automorphism ζ ↦ ζʲ of Q(ζₙ), n the conductor; j must be coprime to n.
    pub fn galois(&self, j: i64) -> Self {
        match &self.0 {
            Repr::Rat(_) => self.clone(),
            Repr::Cyc { n, c } => {
                let jm = j.rem_euclid(*n as i64) as usize;
                assert_eq!(jm.gcd(&(*n as usize)), 1);
                let mut raw = vec![Rational::zero(); *n as usize];
                for (k, x) in c.iter().enumerate() {
                    raw[(k * jm) % *n as usize] += x;
                }
                Self::canonicalize(raw, *n)
            }
        }
    }

    /// Complex conjugate (ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// All k-th roots of `self` inside cyclotomic fields of conductor at most `max_conductor`.
    ///
    /// Handles elements of the form ρ·ζ with ρ rational and ζ a root of unity;
    /// returns `None` otherwise, or when a root would need a larger conductor.
    pub fn kth_roots(&self, k: u32, max_conductor: u32) -> Option<Vec<FieldElement>> {
        if self.is_zero() || k == 0 {
            return None;
        }
        let r = self.one_kth_root(k)?;
        let roots: Vec<FieldElement> = (0..k as i64)
            .map(|j| &r * &FieldElement::root_of_unity(k, j))
            .collect();
        if roots.iter().any(|x| x.conductor() > max_conductor) {
            return None;
        }
        Some(roots)
    }

    fn one_kth_root(&self, k: u32) -> Option<FieldElement> {
        if let Some(q) = self.as_rational() {
            let root = rational_kth_root(&q.abs(), k)?;
            let r = FieldElement::from_rational(root);
            return Some(if q.is_positive() {
                r
            } else if k % 2 == 1 {
                -r
            } else {
                &r * &FieldElement::root_of_unity(2 * k, 1)
            });
        }
        let n = self.conductor();
        let big_n = lcm(2, n);
        let q = self.pow(big_n as i64);
        let q = q.as_rational()?.clone();
        let rho = rational_kth_root(&q.abs(), big_n)?;
        let u = self * &FieldElement::from_rational(rho.recip());
        let j = (0..2 * big_n as i64).find(|&j| FieldElement::root_of_unity(2 * big_n, j) == u)?;
        let rho_k = rational_kth_root(&rho, k)?;
        if 2 * big_n as u64 * k as u64 > MAX_CONDUCTOR as u64 {
            return None;
        }
        Some(&FieldElement::from_rational(rho_k) * &FieldElement::root_of_unity(2 * big_n * k, j))
    }

    fn fmt_symbol(n: u32) -> String {
        match n {
            3 => "w".into(),
            4 => "i".into(),
            5 => "z5".into(),
            _ => format!("z{}", n),
        }
    }

    /// Number of nonzero coefficients in the stored representation.
    pub fn term_count(&self) -> usize {
        match &self.0 {
            Repr::Rat(q) => usize::from(!q.is_zero()),
            Repr::Cyc { c, .. } => c.iter().filter(|x| !x.is_zero()).count(),
        }
    }
}

fn rational_kth_root(q: &Rational, k: u32) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().nth_root(k);
    let den = q.denom().nth_root(k);
    if num.pow(k) == *q.numer() && den.pow(k) == *q.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Gaussian elimination on an augmented square system; returns the solution column.
fn solve_square(m: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < col {
                    let (a, b) = m.split_at_mut(col);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[col], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

type SubfieldKey = (u32, u32);

struct SubfieldData {
    /// pivot rows of the embedding matrix, and the inverse of the pivot block
    pivots: Vec<usize>,
    inv: Vec<Vec<Rational>>,
    embed: Vec<Vec<Rational>>,
}

fn subfield_cache() -> &'static RwLock<HashMap<SubfieldKey, Arc<SubfieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<SubfieldKey, Arc<SubfieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn subfield_data(n: u32, d: u32) -> Arc<SubfieldData> {
    if let Some(s) = subfield_cache().read().unwrap().get(&(n, d)) {
        return s.clone();
    }
    let cn = cyclo(n);
    let phid = euler_phi(d);
    let step = (n / d) as usize;
    // columns: images of ζ_d^j
    let embed: Vec<Vec<Rational>> = (0..phid)
        .map(|j| {
            let mut raw = vec![Rational::zero(); j * step + 1];
            raw[j * step] = Rational::one();
            reduce(&cn, raw)
        })
        .collect();
    // choose phid independent rows greedily
    let mut pivots = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for r in 0..cn.phi {
        let row: Vec<Rational> = (0..phid).map(|j| embed[j][r].clone()).collect();
        let mut cand = basis.clone();
        cand.push(row);
        if crate::linalg::rank_rat(&cand) == cand.len() {
            basis = cand;
            pivots.push(r);
            if pivots.len() == phid {
                break;
            }
        }
    }
    let inv = crate::linalg::inverse_rat(&basis).expect("embedding has full rank");
    let data = Arc::new(SubfieldData { pivots, inv, embed });
    subfield_cache().write().unwrap().insert((n, d), data.clone());
    data
}

fn subfield_coords(n: u32, d: u32, v: &[Rational]) -> Option<Vec<Rational>> {
    let s = subfield_data(n, d);
    let phid = s.pivots.len();
    let rhs: Vec<Rational> = s.pivots.iter().map(|&r| v[r].clone()).collect();
    let x: Vec<Rational> = (0..phid)
        .map(|i| {
            s.inv[i]
                .iter()
                .zip(rhs.iter())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect();
    for (r, vr) in v.iter().enumerate() {
        let mut acc = Rational::zero();
        for (j, xj) in x.iter().enumerate() {
            if !xj.is_zero() && !s.embed[j][r].is_zero() {
                acc += xj * &s.embed[j][r];
            }
        }
        if &acc != vr {
            return None;
        }
    }
    Some(x)
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) => write!(f, "{}", q),
            Repr::Cyc { n, c } => {
                let sym = Self::fmt_symbol(*n);
                let mut first = true;
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let neg = x.is_negative();
                    let a = x.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if neg { "-" } else { "+" })?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{}", a)?,
                        _ => {
                            if !a.is_one() {
                                write!(f, "{}*", a)?;
                            }
                            if k == 1 {
                                write!(f, "{}", sym)?;
                            } else {
                                write!(f, "{}^{}", sym, k)?;
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

fn add_vec(a: &[Rational], b: &[Rational], _: &Cyclo) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_vec(a: &[Rational], b: &[Rational], _: &Cyclo) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mul_vec(a: &[Rational], b: &[Rational], c: &Cyclo) -> Vec<Rational> {
    let mut raw = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                raw[i + j] += x * y;
            }
        }
    }
    reduce(c, raw)
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement(Repr::Rat(a + b)),
            _ => self.binop(rhs, add_vec),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement(Repr::Rat(a - b)),
            _ => self.binop(rhs, sub_vec),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement(Repr::Rat(a * b)),
            (Repr::Rat(a), Repr::Cyc { n, c }) | (Repr::Cyc { n, c }, Repr::Rat(a)) => {
                if a.is_zero() {
                    FieldElement::zero()
                } else {
                    FieldElement(Repr::Cyc { n: *n, c: c.iter().map(|x| x * a).collect() })
                }
            }
            _ => self.binop(rhs, mul_vec),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Rat(a) => FieldElement(Repr::Rat(-a)),
            Repr::Cyc { n, c } => FieldElement(Repr::Cyc { n: *n, c: c.iter().map(|x| -x).collect() }),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<Rational> for FieldElement {
    fn from(q: Rational) -> Self {
        FieldElement::from_rational(q)
    }
}

/// Smallest conductor containing every element of the slice.
pub fn common_conductor<'a>(xs: impl IntoIterator<Item = &'a FieldElement>) -> u32 {
    xs.into_iter().fold(1, |acc, x| lcm(acc, x.conductor()))
}

/// Rational approximated as f64, used only for display of timings and ratios.
pub fn rational_to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> FieldElement {
        FieldElement::root_of_unity(n, k)
    }

    #[test]
    fn zeta3_squared_reduces() {
        let w2 = z(3, 2);
        assert_eq!(w2, -FieldElement::one() - z(3, 1));
        assert_eq!(w2.to_string(), "-1 - w");
    }

    #[test]
    fn zeta5_fifth_power_is_one() {
        assert!(z(5, 1).pow(5).is_one());
        assert!(FieldElement::canonicalize(vec![rat_int(0); 6].into_iter().enumerate().map(|(k, _)| if k == 5 { rat_int(1) } else { rat_int(0) }).collect(), 5).is_one());
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        let s = FieldElement::canonicalize(vec![rat_int(1), rat_int(1), rat_int(1)], 3);
        assert!(s.is_zero());
        let w = FieldElement::omega();
        assert!((&w * &w + &w + FieldElement::one()).is_zero());
        assert!(!(&w - &FieldElement::one()).is_zero());
        assert!(FieldElement::frac(0, 7).is_zero());
    }

    #[test]
    fn basic_arithmetic() {
        let w = FieldElement::omega();
        let one = FieldElement::one();
        assert!((&(&one + &w) * &(-&w)).is_one());
        assert_eq!(FieldElement::frac(1, 2) + FieldElement::frac(1, 3), FieldElement::frac(5, 6));
        assert_eq!(
            field_arith(&one, &FieldElement::zero(), Op::Div),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn conductor_two_mod_four_folds() {
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(2, 1), FieldElement::from_int(-1));
        assert_eq!(z(10, 2), z(5, 1));
    }

    #[test]
    fn demotes_to_minimal_conductor() {
        let a = z(15, 5);
        assert_eq!(a.conductor(), 3);
        assert_eq!(a, FieldElement::omega());
        let b = z(12, 3);
        assert_eq!(b.conductor(), 4);
        let i = z(4, 1);
        assert!((&i * &i + FieldElement::one()).is_zero());
        assert_eq!(z(9, 3), FieldElement::omega());
        let mixed = &z(3, 1) * &z(5, 1);
        assert_eq!(mixed.conductor(), 15);
        assert_eq!(&mixed * &z(5, -1), z(3, 1));
    }

    #[test]
    fn inverses() {
        let a = &z(5, 1) + &FieldElement::from_int(2);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        let b = &z(15, 1) + &z(15, 7);
        assert!((&b * &b.inv().unwrap()).is_one());
    }

    #[test]
    fn roots() {
        let r = FieldElement::from_int(-8).kth_roots(3, 60).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.contains(&FieldElement::from_int(-2)));
        for x in &r {
            assert_eq!(x.pow(3), FieldElement::from_int(-8));
        }
        let w = FieldElement::omega();
        let r5 = w.kth_roots(5, 15).unwrap();
        for x in &r5 {
            assert_eq!(x.pow(5), w);
            assert!(x.conductor() <= 15);
        }
        assert!(FieldElement::from_int(2).kth_roots(2, 60).is_none());
        let m1 = FieldElement::from_int(-1).kth_roots(2, 60).unwrap();
        assert!(m1.contains(&z(4, 1)));
    }

    #[test]
    fn galois_conjugates() {
        let w = FieldElement::omega();
        assert_eq!(w.conj(), z(3, 2));
        let x = &z(5, 1) + &z(5, 4);
        assert_eq!(x.conj(), x);
    }
}
