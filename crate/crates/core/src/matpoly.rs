//! Square matrices over polynomials and rational functions.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

/// The commutative ring operations the matrix code needs.
pub trait RingElem: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for GaussianRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Square `m × m` matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    m: usize,
    entries: Vec<T>,
}

/// Matrix polynomial.
pub type MatPoly = Matrix<Polynomial>;

impl<T: RingElem> Matrix<T> {
    /// Rows must form a nonempty square grid.
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::ShapeMismatch("matrix has no rows".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!("row {bad} has {} entries, expected {m}", rows[bad].len())));
        }
        Ok(Matrix { m, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                entries.push(f(i, j));
            }
        }
        Matrix { m, entries }
    }

    pub fn identity(m: usize) -> Self {
        Self::from_fn(m, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(d: &[T]) -> Self {
        Self::from_fn(d.len(), |i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.m + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.m + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.m).map(<[T]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.m..(i + 1) * self.m]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { m: self.m, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix { m: self.m, entries: self.entries.iter().map(f).collect::<std::result::Result<_, _>>()? })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.m, |i, j| self.get(j, i).clone())
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.m).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.m).all(|i| (i + 1..self.m).all(|j| self.get(i, j).is_zero()))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_size(rhs)?;
        Ok(Self::from_fn(self.m, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.m {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        }))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_size(rhs)?;
        Ok(Self::from_fn(self.m, |i, j| self.get(i, j).add(rhs.get(i, j))))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    fn check_size(&self, rhs: &Self) -> Result<()> {
        if self.m == rhs.m {
            Ok(())
        } else {
            Err(Error::SizeMismatch(format!("{}x{} against {}x{}", self.m, self.m, rhs.m, rhs.m)))
        }
    }

    /// Product of a chain of equally sized matrices.
    pub fn product(factors: &[&Self]) -> Result<Self> {
        let mut it = factors.iter();
        let first = it.next().ok_or_else(|| Error::SizeMismatch("empty product".into()))?;
        it.try_fold((*first).clone(), |acc, f| acc.mul(f))
    }

    /// Swaps rows `a` and `b`.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.m {
                self.entries.swap(a * self.m + c, b * self.m + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.m {
                self.entries.swap(r * self.m + a, r * self.m + b);
            }
        }
    }

    /// `row[dst] += f · row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, f: &T) {
        if f.is_zero() {
            return;
        }
        for c in 0..self.m {
            let v = self.get(src, c).mul(f);
            if !v.is_zero() {
                let cell = self.get_mut(dst, c);
                *cell = cell.add(&v);
            }
        }
    }

    /// `col[dst] += f · col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, f: &T) {
        if f.is_zero() {
            return;
        }
        for r in 0..self.m {
            let v = self.get(r, src).mul(f);
            if !v.is_zero() {
                let cell = self.get_mut(r, dst);
                *cell = cell.add(&v);
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, f: &T) {
        for c in 0..self.m {
            let v = self.get(i, c).mul(f);
            self.set(i, c, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, f: &T) {
        for r in 0..self.m {
            let v = self.get(r, j).mul(f);
            self.set(r, j, v);
        }
    }

    /// Determinant by cofactor expansion along rows, memoized on the set of
    /// remaining columns.
    pub fn det(&self) -> T {
        let rows: Vec<usize> = (0..self.m).collect();
        let cols: Vec<usize> = (0..self.m).collect();
        self.sub_det(&rows, &cols)
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn sub_det(&self, rows: &[usize], cols: &[usize]) -> T {
        assert_eq!(rows.len(), cols.len());
        assert!(cols.len() < 32, "matrix too large for cofactor expansion");
        let mut memo: HashMap<u32, T> = HashMap::new();
        let full = if cols.is_empty() { 0 } else { u32::MAX >> (32 - cols.len()) };
        self.det_rec(rows, cols, full, &mut memo)
    }

    fn det_rec(&self, rows: &[usize], cols: &[usize], mask: u32, memo: &mut HashMap<u32, T>) -> T {
        if mask == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let r = rows[rows.len() - mask.count_ones() as usize];
        let mut acc = T::zero();
        let mut position = 0;
        for (k, &c) in cols.iter().enumerate() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let a = self.get(r, c);
            if !a.is_zero() {
                let minor = self.det_rec(rows, cols, mask & !(1 << k), memo);
                let term = a.mul(&minor);
                acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All `r × r` minors.
    pub fn minors(&self, r: usize) -> Vec<T> {
        let subsets = index_subsets(self.m, r);
        let mut out = Vec::with_capacity(subsets.len() * subsets.len());
        for rows in &subsets {
            for cols in &subsets {
                out.push(self.sub_det(rows, cols));
            }
        }
        out
    }

    /// Transposed cofactor matrix, so that `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Self {
        if self.m == 1 {
            return Self::identity(1);
        }
        let idx: Vec<usize> = (0..self.m).collect();
        Self::from_fn(self.m, |i, j| {
            let rows: Vec<usize> = idx.iter().copied().filter(|&r| r != j).collect();
            let cols: Vec<usize> = idx.iter().copied().filter(|&c| c != i).collect();
            let d = self.sub_det(&rows, &cols);
            if (i + j) % 2 == 0 {
                d
            } else {
                d.neg()
            }
        })
    }
}

/// Increasing `r`-element subsets of `0..n`.
fn index_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in start..n {
            cur.push(k);
            rec(k + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

impl Matrix<Polynomial> {
    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|c| Polynomial::from_ints(c)).collect()).collect())
    }

    /// Largest entry degree; `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Polynomial::degree).max()
    }

    /// `z^n · A(1/z)` entrywise.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        let entries = self.entries.iter().map(|p| p.reverse(n, false)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { m: self.m, entries })
    }

    pub fn eval(&self, x: &GaussianRational) -> Matrix<GaussianRational> {
        self.map(|p| p.eval(x))
    }

    pub fn at_zero(&self) -> Matrix<GaussianRational> {
        self.map(Polynomial::at_zero)
    }

    pub fn scale_const(&self, c: &GaussianRational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn to_rational(&self) -> Matrix<RationalFunction> {
        self.map(|p| RationalFunction::from_poly(p.clone()))
    }

    /// Lower triangular with every diagonal entry a power of `z`; returns
    /// those powers.
    pub fn z_power_diagonal(&self) -> Option<Vec<usize>> {
        (0..self.m)
            .map(|i| {
                let d = self.get(i, i);
                let (v, rest) = d.strip_z();
                (rest.is_one()).then_some(v)
            })
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.m {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.m {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.m + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn det_of_p1() {
        let a = MatPoly::from_int_rows(&[&[&[-1, 1], &[1]], &[&[], &[-1, 1]]]).unwrap();
        assert_eq!(a.det(), p(&[-1, 1]).pow(2));
    }

    #[test]
    fn det_of_p2() {
        let a = MatPoly::from_int_rows(&[&[&[], &[0, 0, 1]], &[&[-1, 2, -1], &[0, 1, -1]]]).unwrap();
        assert_eq!(a.det(), &Polynomial::z_pow(2) * &p(&[-1, 1]).pow(2));
    }

    #[test]
    fn identity_is_neutral() {
        let a = MatPoly::from_int_rows(&[&[&[1, 2], &[3]], &[&[0, 1], &[5, 0, 1]]]).unwrap();
        assert_eq!(a.mul(&MatPoly::identity(2)).unwrap(), a);
        assert_eq!(MatPoly::identity(2).mul(&a).unwrap(), a);
    }

    #[test]
    fn det_3x3_matches_expansion() {
        let a = MatPoly::from_int_rows(&[
            &[&[1], &[2], &[3]],
            &[&[0, 1], &[1], &[0]],
            &[&[2], &[0, 0, 1], &[1, 1]],
        ])
        .unwrap();
        // 1·(1·(1+z) − 0) − 2·(z(1+z) − 0) + 3·(z·z² − 2)
        let expect = &(&p(&[1, 1]) - &p(&[0, 2, 2])) + &p(&[-6, 0, 0, 3]);
        assert_eq!(a.det(), expect);
    }

    #[test]
    fn adjugate_identity() {
        let a = MatPoly::from_int_rows(&[
            &[&[1, 1], &[2], &[0, 1]],
            &[&[0, 1], &[1], &[3]],
            &[&[2], &[0, 0, 1], &[1, 1]],
        ])
        .unwrap();
        let d = a.det();
        assert_eq!(a.mul(&a.adjugate()).unwrap(), MatPoly::diagonal(&[d.clone(), d.clone(), d]));
    }

    #[test]
    fn minors_of_p1() {
        let a = MatPoly::from_int_rows(&[&[&[-1, 1], &[1]], &[&[], &[-1, 1]]]).unwrap();
        assert_eq!(a.minors(1).len(), 4);
        assert_eq!(a.minors(2), vec![a.det()]);
    }

    #[test]
    fn shape_checks() {
        assert!(matches!(
            MatPoly::new(vec![vec![Polynomial::one()], vec![Polynomial::one(), Polynomial::one()]]),
            Err(Error::ShapeMismatch(_))
        ));
        let a = MatPoly::identity(2);
        assert!(matches!(a.mul(&MatPoly::identity(3)), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn reverse_entrywise() {
        let a = MatPoly::from_int_rows(&[&[&[], &[1]], &[&[-1, 2, -1], &[-1, 1]]]).unwrap();
        let r = a.reverse(2).unwrap();
        assert_eq!(r, MatPoly::from_int_rows(&[&[&[], &[0, 0, 1]], &[&[-1, 2, -1], &[0, 1, -1]]]).unwrap());
    }
}
