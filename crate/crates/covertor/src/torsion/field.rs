//! Field abstraction for exact coefficient arithmetic, and dense matrices
//! over such fields.
//!
//! The two coefficient fields used in practice are the exact rationals and
//! the cyclotomic fields. A cyclotomic element carries its conductor, so
//! zero and one are derived from an existing element rather than from the
//! type alone; matrices keep a context element around for the empty case.

use num::{BigRational, One, Signed, Zero};

use crate::algebra::cyclotomic::CyclotomicNumber;
use crate::error::Error;

pub trait ExactField: Clone + PartialEq + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Panics on division by zero; callers test with [`ExactField::is_zero`].
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl ExactField for BigRational {
    fn zero(&self) -> Self {
        Zero::zero()
    }
    fn one(&self) -> Self {
        One::one()
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
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl ExactField for CyclotomicNumber {
    fn zero(&self) -> Self {
        CyclotomicNumber::zero(self.conductor())
    }
    fn one(&self) -> Self {
        CyclotomicNumber::one(self.conductor())
    }
    fn add(&self, rhs: &Self) -> Self {
        CyclotomicNumber::add(self, rhs).expect("conductor fixed within a computation")
    }
    fn sub(&self, rhs: &Self) -> Self {
        CyclotomicNumber::sub(self, rhs).expect("conductor fixed within a computation")
    }
    fn mul(&self, rhs: &Self) -> Self {
        CyclotomicNumber::mul(self, rhs).expect("conductor fixed within a computation")
    }
    fn div(&self, rhs: &Self) -> Self {
        CyclotomicNumber::div(self, rhs).expect("division by zero or conductor mismatch")
    }
    fn neg(&self) -> Self {
        CyclotomicNumber::neg(self)
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
}

/// Dense matrix over an exact field. Carries a `one` element as field
/// context so that empty matrices still know their field.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<F: ExactField> {
    rows: usize,
    cols: usize,
    one: F,
    data: Vec<F>,
}

impl<F: ExactField> FieldMatrix<F> {
    pub fn zero(rows: usize, cols: usize, one: F) -> Self {
        let data = vec![one.zero(); rows * cols];
        FieldMatrix {
            rows,
            cols,
            one,
            data,
        }
    }

    pub fn identity(n: usize, one: F) -> Self {
        let mut m = FieldMatrix::zero(n, n, one);
        for i in 0..n {
            let v = m.one.one();
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<F>>, one: F) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        assert!(rows_data.iter().all(|r| r.len() == cols), "ragged rows");
        FieldMatrix {
            rows,
            cols,
            one,
            data: rows_data.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context_one(&self) -> &F {
        &self.one
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, rhs: &FieldMatrix<F>) -> FieldMatrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shapes");
        let mut out = FieldMatrix::zero(self.rows, rhs.cols, self.one.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).add(&a.mul(rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.one.zero();
                for (j, x) in v.iter().enumerate() {
                    acc = acc.add(&self.get(i, j).mul(x));
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactField::is_zero)
    }

    /// Determinant by Gaussian elimination with exact division.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return self.one.one();
        }
        let mut a = self.clone();
        let mut det = self.one.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return self.one.zero();
            };
            if p != k {
                for j in 0..n {
                    let tmp = a.get(p, j).clone();
                    a.set(p, j, a.get(k, j).clone());
                    a.set(k, j, tmp);
                }
                det = det.neg();
            }
            let pivot = a.get(k, k).clone();
            det = det.mul(&pivot);
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let factor = a.get(i, k).div(&pivot);
                for j in k..n {
                    let v = a.get(i, j).sub(&factor.mul(a.get(k, j)));
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    let tmp = a.get(p, j).clone();
                    a.set(p, j, a.get(row, j).clone());
                    a.set(row, j, tmp);
                }
            }
            let pivot = a.get(row, col).clone();
            for i in row + 1..self.rows {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let factor = a.get(i, col).div(&pivot);
                for j in col..self.cols {
                    let v = a.get(i, j).sub(&factor.mul(a.get(row, j)));
                    a.set(i, j, v);
                }
            }
            row += 1;
            rank += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination; errors on singular input.
    pub fn inverse(&self) -> Result<FieldMatrix<F>, Error> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = FieldMatrix::identity(n, self.one.clone());
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Err(Error::DimensionMismatch {
                    context: "singular matrix has no inverse".into(),
                });
            };
            if p != k {
                for j in 0..n {
                    let tmp = a.get(p, j).clone();
                    a.set(p, j, a.get(k, j).clone());
                    a.set(k, j, tmp);
                    let tmp = inv.get(p, j).clone();
                    inv.set(p, j, inv.get(k, j).clone());
                    inv.set(k, j, tmp);
                }
            }
            let pivot = a.get(k, k).clone();
            for j in 0..n {
                let v = a.get(k, j).div(&pivot);
                a.set(k, j, v);
                let v = inv.get(k, j).div(&pivot);
                inv.set(k, j, v);
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let factor = a.get(i, k).clone();
                for j in 0..n {
                    let v = a.get(i, j).sub(&factor.mul(a.get(k, j)));
                    a.set(i, j, v);
                    let v = inv.get(i, j).sub(&factor.mul(inv.get(k, j)));
                    inv.set(i, j, v);
                }
            }
        }
        Ok(inv)
    }
}

/// |q| for a rational torsion value.
pub fn rational_abs(q: &BigRational) -> BigRational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn determinant_and_rank() {
        let m = FieldMatrix::from_rows(
            vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]],
            q(1, 1),
        );
        assert_eq!(m.det(), q(-2, 1));
        assert_eq!(m.rank(), 2);
        let singular = FieldMatrix::from_rows(
            vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]],
            q(1, 1),
        );
        assert_eq!(singular.det(), q(0, 1));
        assert_eq!(singular.rank(), 1);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = FieldMatrix::from_rows(
            vec![
                vec![q(2, 1), q(1, 1), q(0, 1)],
                vec![q(1, 1), q(1, 1), q(1, 1)],
                vec![q(0, 1), q(3, 1), q(1, 1)],
            ],
            q(1, 1),
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FieldMatrix::identity(3, q(1, 1)));
    }

    #[test]
    fn empty_matrix_det_is_one() {
        let m: FieldMatrix<BigRational> = FieldMatrix::zero(0, 0, q(1, 1));
        assert_eq!(m.det(), q(1, 1));
    }

    #[test]
    fn cyclotomic_matrix_det() {
        let z = CyclotomicNumber::root_of_unity(4, 1);
        let one = CyclotomicNumber::one(4);
        let m = FieldMatrix::from_rows(
            vec![
                vec![z.clone(), one.clone()],
                vec![one.clone(), z.clone()],
            ],
            one.clone(),
        );
        // z^2 - 1 = -2
        assert_eq!(
            m.det(),
            CyclotomicNumber::from_bigint(4, BigInt::from(-2))
        );
    }
}
