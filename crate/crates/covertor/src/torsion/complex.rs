//! Finite based chain complexes over an exact field or over the integers.

use std::fmt;

use num::BigRational;

use crate::algebra::intmat::IntMatrix;
use crate::error::Error;

use super::field::{ExactField, FieldMatrix};

/// A based chain complex `C_n -> ... -> C_0`. The distinguished basis of
/// each `C_i` is the coordinate basis; `boundary(i)` is the matrix of
/// `C_i -> C_(i-1)` acting on coordinate columns.
#[derive(Clone, Debug)]
pub struct BasedChainComplex<F: ExactField> {
    dims: Vec<usize>,
    boundaries: Vec<FieldMatrix<F>>,
    one: F,
}

impl<F: ExactField> BasedChainComplex<F> {
    /// `dims[i]` is the dimension of `C_i`; `boundaries[i-1]` maps `C_i` to
    /// `C_(i-1)`. Validates shapes and that the composite of consecutive
    /// boundaries vanishes.
    pub fn new(dims: Vec<usize>, boundaries: Vec<FieldMatrix<F>>, one: F) -> Result<Self, Error> {
        if dims.is_empty() {
            return Err(Error::invalid("chain complex needs at least one degree"));
        }
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "{} degrees need {} boundary maps, got {}",
                    dims.len(),
                    dims.len() - 1,
                    boundaries.len()
                ),
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows() != dims[i] || b.cols() != dims[i + 1] {
                return Err(Error::DimensionMismatch {
                    context: format!(
                        "boundary {} should be {}x{}, got {}x{}",
                        i + 1,
                        dims[i],
                        dims[i + 1],
                        b.rows(),
                        b.cols()
                    ),
                });
            }
        }
        for i in 0..boundaries.len().saturating_sub(1) {
            if !boundaries[i].mul(&boundaries[i + 1]).is_zero() {
                return Err(Error::NotAComplex { degree: i + 2 });
            }
        }
        Ok(BasedChainComplex {
            dims,
            boundaries,
            one,
        })
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The boundary `C_i -> C_(i-1)` for `1 <= i <= top_degree`.
    pub fn boundary(&self, i: usize) -> &FieldMatrix<F> {
        &self.boundaries[i - 1]
    }

    pub fn context_one(&self) -> &F {
        &self.one
    }

    /// Applies a basis change in every degree: new coordinates are related
    /// to old by the columns of `p[i]` (the new basis vectors written in the
    /// old one), so boundaries transform to `p[i-1]^-1 * d * p[i]`.
    pub fn change_basis(&self, p: &[FieldMatrix<F>]) -> Result<BasedChainComplex<F>, Error> {
        if p.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                context: "one transition matrix per degree".into(),
            });
        }
        let inverses: Vec<FieldMatrix<F>> = p
            .iter()
            .map(FieldMatrix::inverse)
            .collect::<Result<_, _>>()?;
        let boundaries = (1..self.dims.len())
            .map(|i| inverses[i - 1].mul(self.boundary(i)).mul(&p[i]))
            .collect();
        BasedChainComplex::new(self.dims.clone(), boundaries, self.one.clone())
    }
}

impl<F: ExactField> fmt::Display for BasedChainComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chain complex, dims {:?}", self.dims)?;
        for i in (1..self.dims.len()).rev() {
            writeln!(f, "boundary C_{} -> C_{}:", i, i - 1)?;
            let b = self.boundary(i);
            for r in 0..b.rows() {
                let row: Vec<String> = (0..b.cols()).map(|c| format!("{:?}", b.get(r, c))).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

/// A finite chain complex of free Z-modules.
#[derive(Clone, Debug)]
pub struct IntChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl IntChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, Error> {
        if dims.is_empty() {
            return Err(Error::invalid("chain complex needs at least one degree"));
        }
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch {
                context: "boundary count".into(),
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows() != dims[i] || b.cols() != dims[i + 1] {
                return Err(Error::DimensionMismatch {
                    context: format!("integer boundary {} shape", i + 1),
                });
            }
        }
        for i in 0..boundaries.len().saturating_sub(1) {
            if !boundaries[i].mul(&boundaries[i + 1])?.is_zero() {
                return Err(Error::NotAComplex { degree: i + 2 });
            }
        }
        Ok(IntChainComplex { dims, boundaries })
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn boundary(&self, i: usize) -> &IntMatrix {
        &self.boundaries[i - 1]
    }

    /// The same complex with rational coefficients.
    pub fn to_rational(&self) -> BasedChainComplex<BigRational> {
        let one: BigRational = num::One::one();
        let boundaries = self
            .boundaries
            .iter()
            .map(|b| {
                let mut m = FieldMatrix::zero(b.rows(), b.cols(), one.clone());
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(i, j, BigRational::from_integer(b.get(i, j).clone()));
                    }
                }
                m
            })
            .collect();
        BasedChainComplex::new(self.dims.clone(), boundaries, one)
            .expect("integer complex already validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn rejects_non_complexes() {
        let d2 = IntMatrix::from_rows(&[vec![1], vec![0]]);
        let d1 = IntMatrix::from_rows(&[vec![1, 1]]);
        // d1 * d2 = [1] != 0
        assert!(IntChainComplex::new(vec![1, 2, 1], vec![d1, d2]).is_err());
    }

    #[test]
    fn accepts_and_converts() {
        let d1 = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let c = IntChainComplex::new(vec![2, 2], vec![d1]).unwrap();
        let q = c.to_rational();
        assert_eq!(q.dim(0), 2);
        assert_eq!(
            q.boundary(1).get(1, 1),
            &BigRational::from_integer(BigInt::from(3))
        );
    }

    #[test]
    fn debug_dump_lists_boundaries_by_degree() {
        let d1 = IntMatrix::from_rows(&[vec![5]]);
        let c = IntChainComplex::new(vec![1, 1], vec![d1]).unwrap();
        let dump = format!("{}", c.to_rational());
        assert!(dump.contains("dims [1, 1]"), "{dump}");
        assert!(dump.contains("boundary C_1 -> C_0"), "{dump}");
    }
}
