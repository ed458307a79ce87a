//! Dense exact linear algebra over [`Rational`] and [`FieldElement`].

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{FieldElement, Rational};

/// Minimal field interface shared by the two scalar types.
pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Scalar for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }
    fn one() -> Self {
        FieldElement::one()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        FieldElement::inv(self).expect("inverse of zero")
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref_in_place<T: Scalar>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        if !inv.is_one_like() {
            for x in m[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(pivot_row[c..].iter()) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

trait OneLike {
    fn is_one_like(&self) -> bool;
}

impl<T: Scalar> OneLike for T {
    fn is_one_like(&self) -> bool {
        *self == T::one()
    }
}

pub fn rank_rat(m: &[Vec<Rational>]) -> usize {
    let mut a = m.to_vec();
    rref_in_place(&mut a).len()
}

pub fn inverse_rat(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    inverse_generic(m)
}

fn inverse_generic<T: Scalar>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let piv = rref_in_place(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right kernel {v : m·v = 0} of a matrix with `cols` columns.
pub fn nullspace_generic<T: Scalar>(m: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    let mut a = m.to_vec();
    let piv = rref_in_place(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (r, &pc) in piv.iter().enumerate() {
                let x = &a[r][f];
                if !x.is_zero() {
                    v[pc] = T::zero().sub(x);
                }
            }
            v
        })
        .collect()
}

/// Dense matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<FieldElement>>,
    ncols: usize,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: Vec<Vec<FieldElement>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { rows, ncols }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElement::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(r: usize, c: usize) -> Self {
        Matrix { rows: vec![vec![FieldElement::zero(); c]; r], ncols: c }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = FieldElement::one();
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<FieldElement>]) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        Matrix::new((0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
    }

    pub fn diagonal(d: &[FieldElement]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.rows[i][i] = x.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::new((0..self.ncols).map(|j| self.column(j)).collect())
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.ncols, o.nrows());
        let mut out = Matrix::zeros(self.nrows(), o.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.ncols {
                    let b = &o.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.ncols, v.len());
        self.rows
            .iter()
            .map(|r| {
                r.iter().zip(v).fold(FieldElement::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect()
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix {
        Matrix::new(self.rows.iter().map(|r| r.iter().map(|x| x * s).collect()).collect())
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        Matrix::new(
            self.rows.iter().zip(&o.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect(),
        )
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        Matrix::new(
            self.rows.iter().zip(&o.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect()).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(FieldElement::is_zero))
    }

    /// Some(c) when the matrix equals c·I.
    pub fn scalar_value(&self) -> Option<FieldElement> {
        let c = self.rows.first()?.first()?.clone();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                let want = if i == j { &c } else { &FieldElement::zero() };
                if x != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.rows.clone();
        let p = rref_in_place(&mut a);
        (Matrix { rows: a, ncols: self.ncols }, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        nullspace_generic(&self.rows, self.ncols)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.nrows() != self.ncols {
            return None;
        }
        inverse_generic(&self.rows).map(Matrix::new)
    }

    pub fn det(&self) -> FieldElement {
        assert_eq!(self.nrows(), self.ncols);
        let mut a = self.rows.clone();
        let n = a.len();
        let mut det = FieldElement::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return FieldElement::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv().unwrap();
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] * &inv;
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        det
    }

    /// Solves self·x = b, returning one solution if any.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let mut a: Vec<Vec<FieldElement>> =
            self.rows.iter().zip(b).map(|(r, x)| {
                let mut r = r.clone();
                r.push(x.clone());
                r
            }).collect();
        let piv = rref_in_place(&mut a);
        if piv.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![FieldElement::zero(); self.ncols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = a[r][self.ncols].clone();
        }
        Some(x)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.nrows());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        crate::arith::common_conductor(self.rows.iter().flatten())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_ints(&[&[-1, 1, -1, 1], &[-1, -1, 1, 1], &[1, -1, -1, 1], &[1, 1, 1, 3]]);
        assert_eq!(m.det(), FieldElement::from_int(-24));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(4));
    }

    #[test]
    fn kernel() {
        let m = Matrix::from_ints(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.nullspace();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(FieldElement::is_zero));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[FieldElement::from_int(1), FieldElement::from_int(2)]).is_none());
        assert!(m.solve(&[FieldElement::from_int(2), FieldElement::from_int(2)]).is_some());
    }
}
