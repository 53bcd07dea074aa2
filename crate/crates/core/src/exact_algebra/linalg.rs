//! Dense matrices over an exact field.

use std::fmt;

use num_rational::BigRational;

use super::{IntPoly, RatFunc};
use crate::error::{Error, Result};

/// The exact fields the verifiers run over: `Q(q)` for symbolic identities,
/// `Q` for identities specialized at a rational `q`.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    /// Data needed to map a polynomial in `q` into the field.
    type Point;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
    fn from_poly(p: &IntPoly, at: &Self::Point) -> Result<Self>;
}

impl Field for RatFunc {
    type Point = ();

    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
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
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        RatFunc::checked_div(self, rhs)
    }
    fn from_poly(p: &IntPoly, _: &()) -> Result<Self> {
        Ok(RatFunc::from(p))
    }
}

impl Field for BigRational {
    type Point = BigRational;

    fn zero() -> Self {
        <BigRational as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigRational as num_traits::Zero>::is_zero(self)
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
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
    fn from_poly(p: &IntPoly, at: &BigRational) -> Result<Self> {
        Ok(p.eval(at))
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<F>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| F::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { F::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, rhs: &Matrix<F>) -> Self {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix shapes");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "incompatible vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// `a · self · aᵀ`.
    pub fn conjugate_by(&self, a: &Matrix<F>) -> Self {
        a.mul(self).mul(&a.transpose())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Positions where `self` and `other` differ.
    pub fn mismatches(&self, other: &Matrix<F>) -> Vec<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Solves `self · x = b` by Gaussian elimination.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        assert_eq!(self.rows, self.cols, "solve needs a square matrix");
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let mut aug: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        Self::eliminate(&mut aug, n)?;
        Ok(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }

    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let mut aug: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                row
            })
            .collect();
        Self::eliminate(&mut aug, n)?;
        Ok(Self::from_rows(aug.into_iter().map(|row| row[n..].to_vec()).collect()))
    }

    /// Gauss–Jordan on the first `n` columns of an augmented system.
    fn eliminate(aug: &mut [Vec<F>], n: usize) -> Result<()> {
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            if p != F::one() {
                for x in aug[col].iter_mut() {
                    *x = x.checked_div(&p)?;
                }
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = x.sub(&factor.mul(y));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn determinant(&self) -> Result<F> {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<F>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = F::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(F::zero());
            };
            if pivot != col {
                m.swap(col, pivot);
                det = F::zero().sub(&det);
            }
            let p = m[col][col].clone();
            det = det.mul(&p);
            let pivot_row = m[col].clone();
            for row in m.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = row[col].checked_div(&p)?;
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        Ok(det)
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]))
            .finish()
    }
}

/// Evaluates a symbolic matrix at a rational point.
pub fn specialize(m: &Matrix<RatFunc>, q: &BigRational) -> Result<Matrix<BigRational>> {
    Matrix::try_from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).eval(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn inverse_and_solve_over_q() {
        let m = Matrix::from_rows(vec![vec![r(2), r(1)], vec![r(1), r(1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let x = m.solve(&[r(3), r(2)]).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
        assert_eq!(m.determinant().unwrap(), r(1));
    }

    #[test]
    fn singular_is_reported() {
        let m = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]);
        assert_eq!(m.inverse().unwrap_err(), Error::SingularMatrix);
        assert_eq!(m.determinant().unwrap(), r(0));
    }

    #[test]
    fn symbolic_inverse() {
        let q = RatFunc::from(IntPoly::q());
        let one = RatFunc::one();
        let m = Matrix::from_rows(vec![vec![q.clone(), one.clone()], vec![one.clone(), q.clone()]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let det = m.determinant().unwrap();
        assert_eq!(det, RatFunc::from(IntPoly::from_i64s(&[-1, 0, 1])));
    }
}
