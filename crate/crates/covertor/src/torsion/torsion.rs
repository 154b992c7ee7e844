//! Torsion of a based chain complex.
//!
//! For each degree choose a set `b_i` of boundary vectors as images of a
//! pivot subset of the canonical basis one degree up, so that
//! `b_i ∪ h_i ∪ lift(b_(i-1))` is a basis of `C_i`; the torsion is the
//! alternating product of the transition determinants
//! `prod det[b_i h_i ~b_(i-1) / c_i]^((-1)^(i+1))`, well defined up to sign
//! and independent of the pivot choices.

use crate::error::Error;

use super::complex::BasedChainComplex;
use super::field::{ExactField, FieldMatrix};

/// What a reported torsion value is defined up to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indeterminacy {
    /// A sign only.
    Sign,
    /// A sign and multiplication by roots of unity coming from cell lifts.
    SignAndRootsOfUnity,
}

#[derive(Clone, Debug)]
pub struct TorsionValue<F: ExactField> {
    pub value: F,
    pub defined_up_to: Indeterminacy,
}

/// Pivot scanning order, exposed so tests can verify independence of the
/// choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    Forward,
    Reverse,
}

/// Homology bases, one entry per degree `0..=top`; each basis vector is
/// given in the coordinates of its chain group.
pub type HomologyBases<F> = Vec<Vec<Vec<F>>>;

/// Torsion with respect to the canonical bases and the supplied homology
/// bases (empty bases mean the complex must be acyclic in that degree).
pub fn torsion<F: ExactField>(
    cx: &BasedChainComplex<F>,
    homology: Option<&HomologyBases<F>>,
) -> Result<TorsionValue<F>, Error> {
    torsion_with_pivots(cx, homology, PivotOrder::Forward)
}

pub fn torsion_with_pivots<F: ExactField>(
    cx: &BasedChainComplex<F>,
    homology: Option<&HomologyBases<F>>,
    order: PivotOrder,
) -> Result<TorsionValue<F>, Error> {
    let top = cx.top_degree();
    let one = cx.context_one().clone();
    if let Some(h) = homology {
        if h.len() != top + 1 {
            return Err(Error::DimensionMismatch {
                context: "one homology basis per degree".into(),
            });
        }
    }

    // pivot column subsets of each boundary matrix
    let mut pivots: Vec<Vec<usize>> = vec![Vec::new()];
    for i in 1..=top {
        pivots.push(independent_columns(cx.boundary(i), order));
    }
    pivots.push(Vec::new()); // virtual boundary from degree top+1

    let mut numerator = one.one();
    let mut denominator = one.one();
    for i in 0..=top {
        let dim = cx.dim(i);
        let h_i: &[Vec<F>] = homology.map(|h| h[i].as_slice()).unwrap_or(&[]);
        let r_up = if i < top { pivots[i + 1].len() } else { 0 };
        let r_down = pivots[i].len();
        if r_up + h_i.len() + r_down != dim {
            return match homology {
                None => Err(Error::NonAcyclic {
                    detail: Some(format!("homology in degree {i} is nonzero")),
                }),
                Some(_) => Err(Error::NotHomologyBasis {
                    detail: format!(
                        "degree {i}: {} basis vectors supplied, homology rank is {}",
                        h_i.len(),
                        dim - r_up - r_down
                    ),
                }),
            };
        }
        // homology vectors must be cycles
        if i >= 1 {
            for v in h_i {
                if v.len() != dim {
                    return Err(Error::NotHomologyBasis {
                        detail: format!("degree {i}: basis vector of wrong length"),
                    });
                }
                if !cx.boundary(i).apply(v).iter().all(ExactField::is_zero) {
                    return Err(Error::NotHomologyBasis {
                        detail: format!("degree {i}: supplied vector is not a cycle"),
                    });
                }
            }
        }

        let mut t = FieldMatrix::zero(dim, dim, one.clone());
        let mut col = 0;
        if i < top {
            let b = cx.boundary(i + 1);
            for &j in &pivots[i + 1] {
                for r in 0..dim {
                    t.set(r, col, b.get(r, j).clone());
                }
                col += 1;
            }
        }
        for v in h_i {
            for r in 0..dim {
                t.set(r, col, v[r].clone());
            }
            col += 1;
        }
        for &j in &pivots[i] {
            t.set(j, col, one.one());
            col += 1;
        }
        debug_assert_eq!(col, dim);

        let det = t.det();
        if det.is_zero() {
            return Err(Error::NotHomologyBasis {
                detail: format!("degree {i}: transition matrix is singular"),
            });
        }
        if i % 2 == 1 {
            numerator = numerator.mul(&det);
        } else {
            denominator = denominator.mul(&det);
        }
    }

    Ok(TorsionValue {
        value: numerator.div(&denominator),
        defined_up_to: Indeterminacy::Sign,
    })
}

/// Greedy maximal set of linearly independent columns, scanned in the given
/// order; returned indices are sorted ascending.
fn independent_columns<F: ExactField>(m: &FieldMatrix<F>, order: PivotOrder) -> Vec<usize> {
    let cols: Vec<usize> = match order {
        PivotOrder::Forward => (0..m.cols()).collect(),
        PivotOrder::Reverse => (0..m.cols()).rev().collect(),
    };
    // incremental elimination: keep reduced copies of accepted columns
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new(); // (pivot row, reduced col)
    let mut accepted = Vec::new();
    for j in cols {
        let mut v = m.column(j);
        for (prow, b) in &basis {
            if v[*prow].is_zero() {
                continue;
            }
            let factor = v[*prow].div(&b[*prow]);
            for (x, y) in v.iter_mut().zip(b) {
                *x = x.sub(&factor.mul(y));
            }
        }
        if let Some(prow) = v.iter().position(|x| !x.is_zero()) {
            basis.push((prow, v));
            accepted.push(j);
        }
    }
    accepted.sort_unstable();
    accepted
}

/// Predicted torsion ratio under a change of bases: for each degree the
/// transition determinants `[h'_i/h_i]` and `[c'_i/c_i]` enter as
/// `(det_h / det_c)^((-1)^(i+1))`. `None` entries mean the basis is
/// unchanged in that degree.
pub fn change_of_basis_factor<F: ExactField>(
    one: &F,
    c_changes: &[Option<FieldMatrix<F>>],
    h_changes: &[Option<FieldMatrix<F>>],
) -> Result<F, Error> {
    if c_changes.len() != h_changes.len() {
        return Err(Error::DimensionMismatch {
            context: "basis-change lists must align degree by degree".into(),
        });
    }
    let mut numerator = one.one();
    let mut denominator = one.one();
    for (i, (c, h)) in c_changes.iter().zip(h_changes).enumerate() {
        let det_c = match c {
            Some(m) => m.det(),
            None => one.one(),
        };
        let det_h = match h {
            Some(m) => m.det(),
            None => one.one(),
        };
        if det_c.is_zero() || det_h.is_zero() {
            return Err(Error::DimensionMismatch {
                context: format!("singular transition matrix in degree {i}"),
            });
        }
        let ratio = det_h.div(&det_c);
        if i % 2 == 1 {
            numerator = numerator.mul(&ratio);
        } else {
            denominator = denominator.mul(&ratio);
        }
    }
    Ok(numerator.div(&denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qm(rows: Vec<Vec<i64>>) -> FieldMatrix<BigRational> {
        FieldMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(q).collect())
                .collect(),
            q(1),
        )
    }

    fn complex(dims: Vec<usize>, boundaries: Vec<FieldMatrix<BigRational>>) -> BasedChainComplex<BigRational> {
        BasedChainComplex::new(dims, boundaries, q(1)).unwrap()
    }

    #[test]
    fn identity_two_term_complex() {
        let cx = complex(vec![1, 1], vec![qm(vec![vec![1]])]);
        let t = torsion(&cx, None).unwrap();
        assert_eq!(t.value, q(1));
        assert_eq!(t.defined_up_to, Indeterminacy::Sign);
    }

    #[test]
    fn times_five_two_term_complex() {
        // 0 -> Q --5--> Q -> 0: the degree-0 determinant 5 enters with
        // exponent -1
        let cx = complex(vec![1, 1], vec![qm(vec![vec![5]])]);
        let t = torsion(&cx, None).unwrap();
        assert_eq!(t.value, BigRational::new(BigInt::from(1), BigInt::from(5)));
    }

    #[test]
    fn diagonal_two_term_complex() {
        let cx = complex(vec![2, 2], vec![qm(vec![vec![2, 0], vec![0, 3]])]);
        let t = torsion(&cx, None).unwrap();
        assert_eq!(t.value, BigRational::new(BigInt::from(1), BigInt::from(6)));
    }

    #[test]
    fn non_acyclic_without_homology_is_an_error() {
        let cx = complex(vec![1, 1], vec![qm(vec![vec![0]])]);
        assert!(matches!(
            torsion(&cx, None),
            Err(Error::NonAcyclic { .. })
        ));
    }

    #[test]
    fn homology_bases_give_circle_torsion() {
        // boundary zero: H_0 = H_1 = Q, bases scale the torsion
        let cx = complex(vec![1, 1], vec![qm(vec![vec![0]])]);
        let h = vec![vec![vec![q(1)]], vec![vec![q(1)]]];
        let t = torsion(&cx, Some(&h)).unwrap();
        assert_eq!(t.value, q(1));
        let h2 = vec![vec![vec![q(3)]], vec![vec![q(2)]]];
        let t2 = torsion(&cx, Some(&h2)).unwrap();
        // value is [h_1]/[h_0] = 2/3
        assert_eq!(t2.value, BigRational::new(BigInt::from(2), BigInt::from(3)));
    }

    #[test]
    fn rejects_non_cycle_homology_vector() {
        let cx = complex(vec![1, 2], vec![qm(vec![vec![1, 0]])]);
        // degree-1 vector with nonzero boundary
        let h = vec![vec![], vec![vec![q(1), q(0)]]];
        assert!(matches!(
            torsion(&cx, Some(&h)),
            Err(Error::NotHomologyBasis { .. })
        ));
        // the honest cycle works
        let h = vec![vec![], vec![vec![q(0), q(1)]]];
        assert!(torsion(&cx, Some(&h)).is_ok());
    }

    #[test]
    fn three_term_acyclic_and_pivot_independence() {
        // 0 -> Q --(1,2)^T--> Q^2 --(2,-1)--> Q -> 0
        let d2 = qm(vec![vec![1], vec![2]]);
        let d1 = qm(vec![vec![2, -1]]);
        let cx = complex(vec![1, 2, 1], vec![d1, d2]);
        let f = torsion_with_pivots(&cx, None, PivotOrder::Forward).unwrap();
        let r = torsion_with_pivots(&cx, None, PivotOrder::Reverse).unwrap();
        assert!(f.value == r.value || f.value == r.value.neg());
        assert!(!f.value.is_zero());
    }

    #[test]
    fn change_of_basis_contract() {
        let d2 = qm(vec![vec![1], vec![2]]);
        let d1 = qm(vec![vec![2, -1]]);
        let cx = complex(vec![1, 2, 1], vec![d1, d2]);
        let before = torsion(&cx, None).unwrap().value;

        let p0 = qm(vec![vec![3]]);
        let p1 = qm(vec![vec![1, 1], vec![0, 2]]);
        let p2 = qm(vec![vec![-2]]);
        let changed = cx.change_basis(&[p0.clone(), p1.clone(), p2.clone()]).unwrap();
        let after = torsion(&changed, None).unwrap().value;

        let factor = change_of_basis_factor(
            &q(1),
            &[Some(p0), Some(p1), Some(p2)],
            &[None, None, None],
        )
        .unwrap();
        let predicted = before.mul(&factor);
        assert!(after == predicted || after == predicted.neg());
    }

    #[test]
    fn trivial_change_factor_is_one() {
        let f = change_of_basis_factor::<BigRational>(&q(1), &[None, None], &[None, None])
            .unwrap();
        assert_eq!(f, q(1));
    }

    #[test]
    fn scaling_one_degree_zero_vector() {
        // [c'_0/c_0] = 7 enters the ratio with exponent (-1)^(0+1) = -1,
        // so the predicted torsion factor is 7
        let lambda = qm(vec![vec![7]]);
        let f = change_of_basis_factor(&q(1), &[Some(lambda), None], &[None, None])
            .unwrap();
        assert_eq!(f, q(7));
        // while scaling h_0 by 7 contributes 1/7
        let mu = qm(vec![vec![7]]);
        let g = change_of_basis_factor(&q(1), &[None, None], &[Some(mu), None])
            .unwrap();
        assert_eq!(g, BigRational::new(BigInt::from(1), BigInt::from(7)));
    }
}
