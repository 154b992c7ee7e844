//! Arbitrary-precision integer matrices and Smith normal form.
//!
//! The Smith normal form is the workhorse for every finitely generated
//! abelian group computation in this crate: cokernel orders, subgroup
//! membership, kernel lattices and homology torsion all reduce to it.

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::Error;

/// Dense matrix over the integers, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of `i64` entries. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matrix product {}x{} * {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "hstack row counts".into(),
            });
        }
        let mut out = IntMatrix::zero(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * self.get(src, j);
            let v = self.get(dst, j) + add;
            self.set(dst, j, v);
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * self.get(i, src);
            let v = self.get(i, dst) + add;
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Smith normal form of an integer matrix together with the unimodular
/// transforms: `u * a * v = d` with `d` diagonal, entries forming a
/// divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// The nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
    pub factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Full Smith normal form with transforms. Pivoting always selects the
/// smallest nonzero entry of the remaining submatrix, which keeps the
/// arbitrary-precision entries moderate.
pub fn smith_decomposition(a: &IntMatrix) -> SmithDecomposition {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let (rows, cols) = (a.rows(), a.cols());
    let limit = rows.min(cols);

    for k in 0..limit {
        'pivot: loop {
            // smallest nonzero entry in the trailing submatrix
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !d.get(i, j).is_zero()
                        && best
                            .map(|(bi, bj)| d.get(i, j).abs() < d.get(bi, bj).abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v, k);
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);
            if d.get(k, k).sign() == Sign::Minus {
                d.negate_row(k);
                u.negate_row(k);
            }

            let pivot = d.get(k, k).clone();
            let mut dirty = false;
            for i in k + 1..rows {
                if !d.get(i, k).is_zero() {
                    let q = -(d.get(i, k).div_floor(&pivot));
                    d.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                    if !d.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !d.get(k, j).is_zero() {
                    let q = -(d.get(k, j).div_floor(&pivot));
                    d.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                    if !d.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // pivot must divide everything that remains
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(d.get(i, j) % &pivot).is_zero() {
                        let one = BigInt::one();
                        d.add_row_multiple(k, i, &one);
                        u.add_row_multiple(k, i, &one);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    finish(u, d, v, limit)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix, upto: usize) -> SmithDecomposition {
    let mut factors = Vec::new();
    for k in 0..upto {
        let e = d.get(k, k);
        if e.is_zero() {
            break;
        }
        factors.push(e.abs());
    }
    SmithDecomposition { u, d, v, factors }
}

/// Invariant factors (positive, forming a divisibility chain) and the rank.
pub fn smith_normal_form(a: &IntMatrix) -> (Vec<BigInt>, usize) {
    let dec = smith_decomposition(a);
    let rank = dec.rank();
    (dec.factors, rank)
}

/// Rank of the matrix over the rationals.
pub fn rank(a: &IntMatrix) -> usize {
    smith_decomposition(a).rank()
}

/// Order of `Z^rows / im(a)`: the product of the invariant factors when the
/// cokernel is finite, or zero when it has free rank.
pub fn cokernel_order(a: &IntMatrix) -> BigInt {
    let (factors, rank) = smith_normal_form(a);
    if rank < a.rows() {
        return BigInt::zero();
    }
    factors.iter().product()
}

/// A basis of the integer kernel lattice of `a`, as matrix columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let dec = smith_decomposition(a);
    let r = dec.rank();
    let mut out = IntMatrix::zero(a.cols(), a.cols() - r);
    for j in r..a.cols() {
        for i in 0..a.cols() {
            out.set(i, j - r, dec.v.get(i, j).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_vec(rows: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let (f, r) = smith_normal_form(&IntMatrix::from_rows(rows));
        (
            f.iter().map(|x| i64::try_from(x).unwrap()).collect(),
            r,
        )
    }

    #[test]
    fn diag_2_3_gives_chain_1_6() {
        assert_eq!(snf_vec(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 2));
    }

    #[test]
    fn zero_matrix_has_free_cokernel() {
        let m = IntMatrix::zero(2, 2);
        let (f, r) = smith_normal_form(&m);
        assert!(f.is_empty());
        assert_eq!(r, 0);
        assert_eq!(cokernel_order(&m), BigInt::zero());
    }

    #[test]
    fn worked_example() {
        assert_eq!(snf_vec(&[vec![2, 4], vec![-2, 6]]), (vec![2, 10], 2));
        assert_eq!(
            cokernel_order(&IntMatrix::from_rows(&[vec![2, 4], vec![-2, 6]])),
            BigInt::from(20)
        );
    }

    #[test]
    fn empty_and_degenerate_shapes() {
        // no rows: cokernel is the zero group
        let m = IntMatrix::zero(0, 3);
        assert_eq!(cokernel_order(&m), BigInt::one());
        // no columns: cokernel is Z^2
        let m = IntMatrix::zero(2, 0);
        assert_eq!(cokernel_order(&m), BigInt::zero());
    }

    #[test]
    fn decomposition_is_consistent() {
        let a = IntMatrix::from_rows(&[vec![6, 4, 2], vec![2, 8, 4], vec![0, 10, 2]]);
        let dec = smith_decomposition(&a);
        let uav = dec.u.mul(&a).unwrap().mul(&dec.v).unwrap();
        assert_eq!(uav, dec.d);
        for w in dec.factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
    }

    #[test]
    fn kernel_basis_annihilates() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
    }
}
