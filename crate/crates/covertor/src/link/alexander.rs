//! Multivariable Alexander polynomials via Fox calculus.
//!
//! The Alexander matrix of a Wirtinger presentation has one row per relator
//! and one column per generator. After dropping the redundant relator, the
//! polynomial is recovered from a deleted-column minor: directly for knots,
//! and divided exactly by `t_c - 1` (c the deleted generator's component)
//! for links with more components. A second column choice cross-checks
//! every computation.

use std::collections::BTreeMap;

use crate::algebra::laurent::LaurentPoly;
use crate::error::Error;

use super::braid::LinkDiagram;
use super::fox::fox_derivative;
use super::wirtinger::{wirtinger, WirtingerPresentation};

/// Table of normalized Alexander polynomials of sublinks, keyed by the
/// sorted component index set. The polynomial for a key of size k uses k
/// variables, one per kept component in increasing order. The empty sublink
/// has polynomial 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderData {
    table: BTreeMap<Vec<usize>, LaurentPoly>,
}

impl AlexanderData {
    pub fn new() -> Self {
        let mut table = BTreeMap::new();
        table.insert(Vec::new(), LaurentPoly::one(0));
        AlexanderData { table }
    }

    pub fn insert(&mut self, mut support: Vec<usize>, poly: LaurentPoly) -> Result<(), Error> {
        support.sort_unstable();
        support.dedup();
        if poly.nvars() != support.len() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "sublink of {} components needs a {}-variable polynomial, got {}",
                    support.len(),
                    support.len(),
                    poly.nvars()
                ),
            });
        }
        self.table.insert(support, poly.normalize());
        Ok(())
    }

    pub fn get(&self, support: &[usize]) -> Option<&LaurentPoly> {
        self.table.get(support)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &LaurentPoly)> {
        self.table.iter()
    }
}

impl Default for AlexanderData {
    fn default() -> Self {
        AlexanderData::new()
    }
}

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// elimination; every division is exact in the polynomial ring.
pub(crate) fn laurent_det(m: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return LaurentPoly::zero(nvars);
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let hi = a[k][k].mul(&a[i][j]).expect("same nvars");
                let lo = a[i][k].mul(&a[k][j]).expect("same nvars");
                let num = hi.sub(&lo).expect("same nvars");
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            a[i][k] = LaurentPoly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// The Alexander matrix: rows indexed by relators, columns by generators.
fn alexander_matrix(p: &WirtingerPresentation) -> Result<Vec<Vec<LaurentPoly>>, Error> {
    let nvars = p.num_components();
    let vars = p.component_tags();
    p.relators()
        .iter()
        .map(|r| {
            (0..p.num_generators())
                .map(|g| fox_derivative(r, g, vars, nvars))
                .collect()
        })
        .collect()
}

fn minor_deleting_column(m: &[Vec<LaurentPoly>], col: usize, nvars: usize) -> LaurentPoly {
    let reduced: Vec<Vec<LaurentPoly>> = m
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    laurent_det(&reduced, nvars)
}

/// Normalized Alexander polynomial of the presented link.
///
/// A zero result means the first homology of the maximal abelian cover has
/// free rank, as happens for split links.
pub fn alexander_polynomial(p: &WirtingerPresentation) -> Result<LaurentPoly, Error> {
    let mu = p.num_components();
    let n = p.num_generators();
    let r = p.relators().len();

    if r + 1 < n {
        // deficiency at least two: split after simplification
        if mu == 1 {
            return Err(Error::BadPresentation {
                detail: "single component presentation with deficiency > 1".into(),
            });
        }
        return Ok(LaurentPoly::zero(mu));
    }
    if r > n {
        return Err(Error::BadPresentation {
            detail: format!("{r} relators for {n} generators"),
        });
    }
    if n == 1 {
        // unknot, one arc
        return Ok(LaurentPoly::one(mu));
    }

    let mut matrix = alexander_matrix(p)?;
    if r == n {
        // drop the redundant relator
        matrix.pop();
    }

    let col_a = 0;
    let col_b = n - 1;
    let delta = |col: usize| -> Result<LaurentPoly, Error> {
        let minor = minor_deleting_column(&matrix, col, mu);
        if mu == 1 {
            return Ok(minor.normalize());
        }
        let c = p.component_of(col);
        let divisor = LaurentPoly::var(mu, c).sub(&LaurentPoly::one(mu))?;
        let q = minor.exact_div(&divisor).ok_or_else(|| Error::NonExactDivision {
            context: format!("minor {minor} by {divisor}"),
        })?;
        Ok(q.normalize())
    };

    let da = delta(col_a)?;
    if col_b != col_a {
        let db = delta(col_b)?;
        if da != db {
            return Err(Error::InconsistentMinors {
                left: da.to_string(),
                right: db.to_string(),
            });
        }
    }
    Ok(da)
}

/// Computes the Alexander polynomials of the requested component subsets of
/// a diagram: each subset via strand deletion, Wirtinger presentation and
/// Fox calculus. The empty subset is always present with polynomial 1.
pub fn build_alexander_data(
    diagram: &LinkDiagram,
    needed: &[Vec<usize>],
) -> Result<AlexanderData, Error> {
    let mut data = AlexanderData::new();
    for support in needed {
        let mut key = support.clone();
        key.sort_unstable();
        key.dedup();
        if key.is_empty() || data.get(&key).is_some() {
            continue;
        }
        let sub = diagram.delete_components(&key)?;
        let poly = alexander_polynomial(&wirtinger(&sub))?;
        data.insert(key, poly)?;
    }
    Ok(data)
}
