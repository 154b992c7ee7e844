//! Chain complexes of modules over the group algebra of a finite abelian
//! group, and their decomposition into character components.
//!
//! Each degree is a direct sum of permutation modules Z[G/S_j] given by one
//! basis cell per orbit together with its stabilizer S_j. Projecting by the
//! idempotent of a character keeps the cells whose stabilizer the character
//! kills and applies the character to the group-algebra boundary entries.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, Zero};

use crate::abelian::{Character, FiniteAbelianGroup, GroupElement};
use crate::algebra::cyclotomic::CyclotomicNumber;
use crate::error::Error;

use super::complex::BasedChainComplex;
use super::field::FieldMatrix;

/// Element of the integral group algebra `Z[G]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupAlgebraElem {
    terms: BTreeMap<Vec<u64>, BigInt>,
}

impl GroupAlgebraElem {
    pub fn zero() -> Self {
        GroupAlgebraElem::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupElement, BigInt)>) -> Self {
        let mut out = GroupAlgebraElem::zero();
        for (g, c) in terms {
            out.add_term(g.coords().to_vec(), c);
        }
        out
    }

    /// The single group element with coefficient 1.
    pub fn of(g: &GroupElement) -> Self {
        GroupAlgebraElem::from_terms([(g.clone(), BigInt::from(1))])
    }

    fn add_term(&mut self, coords: Vec<u64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(coords.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&coords);
        }
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            let e = out.terms.entry(g.clone()).or_insert_with(BigInt::zero);
            *e += c;
        }
        out.normalized()
    }

    pub fn sub(&self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            let e = out.terms.entry(g.clone()).or_insert_with(BigInt::zero);
            *e -= c;
        }
        out.normalized()
    }

    pub fn mul(&self, rhs: &GroupAlgebraElem, group: &FiniteAbelianGroup) -> GroupAlgebraElem {
        let mut out = GroupAlgebraElem::zero();
        for (ga, ca) in &self.terms {
            for (gb, cb) in &rhs.terms {
                let sum: Vec<u64> = ga
                    .iter()
                    .zip(gb)
                    .zip(group.invariant_factors())
                    .map(|((&x, &y), &d)| (x + y) % d)
                    .collect();
                let e = out.terms.entry(sum).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        out.normalized()
    }

    /// Translate by a single group element.
    pub fn translate(&self, g: &GroupElement, group: &FiniteAbelianGroup) -> GroupAlgebraElem {
        self.mul(&GroupAlgebraElem::of(g), group)
    }

    /// Sum of coefficients: the image under the augmentation `Z[G] -> Z`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies a character term by term, landing in Q(zeta_n) for n the
    /// group exponent.
    pub fn apply_character(
        &self,
        xi: &Character,
        group: &FiniteAbelianGroup,
    ) -> Result<CyclotomicNumber, Error> {
        let n = group.exponent();
        let mut acc = CyclotomicNumber::zero(n);
        for (coords, c) in &self.terms {
            let g = group.element(&coords.iter().map(|&x| x as i64).collect::<Vec<_>>())?;
            let z = group.character_eval(xi, &g)?;
            acc = acc.add(&z.mul(&CyclotomicNumber::from_bigint(n, c.clone()))?)?;
        }
        Ok(acc)
    }

    /// Reduces every group element to the minimal representative of its
    /// coset modulo the subgroup, merging coefficients.
    fn reduce_mod(&self, subgroup: &[GroupElement], group: &FiniteAbelianGroup) -> GroupAlgebraElem {
        let elems = subgroup_elements(group, subgroup);
        let mut out = GroupAlgebraElem::zero();
        for (coords, c) in &self.terms {
            let g = GroupAlgebraElem::rebuild(group, coords);
            let rep = elems
                .iter()
                .map(|s| group.add(&g, s).coords().to_vec())
                .min()
                .expect("subgroup contains the identity");
            let e = out.terms.entry(rep).or_insert_with(BigInt::zero);
            *e += c;
        }
        out.normalized()
    }

    fn rebuild(group: &FiniteAbelianGroup, coords: &[u64]) -> GroupElement {
        group
            .element(&coords.iter().map(|&x| x as i64).collect::<Vec<_>>())
            .expect("stored coordinates are reduced")
    }
}

/// All elements of the subgroup generated by the given elements.
pub fn subgroup_elements(
    group: &FiniteAbelianGroup,
    generators: &[GroupElement],
) -> Vec<GroupElement> {
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut frontier = vec![group.identity()];
    seen.insert(group.identity().coords().to_vec());
    while let Some(e) = frontier.pop() {
        for g in generators {
            let next = group.add(&e, g);
            if seen.insert(next.coords().to_vec()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter()
        .map(|coords| GroupAlgebraElem::rebuild(group, &coords))
        .collect()
}

/// One basis cell: an orbit representative with its stabilizer subgroup,
/// given by generators.
#[derive(Clone, Debug)]
pub struct EquivariantCell {
    pub stabilizer: Vec<GroupElement>,
}

impl EquivariantCell {
    pub fn free() -> Self {
        EquivariantCell { stabilizer: vec![] }
    }

    pub fn with_stabilizer(generators: Vec<GroupElement>) -> Self {
        EquivariantCell {
            stabilizer: generators,
        }
    }
}

/// A G-equivariant cellular chain complex: in each degree a list of cells
/// (orbit representatives with stabilizers) and a boundary matrix with
/// entries in `Z[G]`, well defined modulo the target stabilizers.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    group: FiniteAbelianGroup,
    cells: Vec<Vec<EquivariantCell>>,
    /// boundaries[i] maps degree i+1 to degree i: rows = target cells,
    /// columns = source cells.
    boundaries: Vec<Vec<Vec<GroupAlgebraElem>>>,
}

impl EquivariantComplex {
    pub fn new(
        group: FiniteAbelianGroup,
        cells: Vec<Vec<EquivariantCell>>,
        boundaries: Vec<Vec<Vec<GroupAlgebraElem>>>,
    ) -> Result<Self, Error> {
        if cells.is_empty() {
            return Err(Error::invalid("equivariant complex needs at least one degree"));
        }
        if boundaries.len() + 1 != cells.len() {
            return Err(Error::DimensionMismatch {
                context: "one boundary matrix between consecutive degrees".into(),
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            let (nrows, ncols) = (cells[i].len(), cells[i + 1].len());
            if b.len() != nrows || b.iter().any(|row| row.len() != ncols) {
                return Err(Error::DimensionMismatch {
                    context: format!("equivariant boundary {} shape", i + 1),
                });
            }
        }
        let cx = EquivariantComplex {
            group,
            cells,
            boundaries,
        };
        cx.validate()?;
        Ok(cx)
    }

    fn validate(&self) -> Result<(), Error> {
        // entries must be invariant under source stabilizers, modulo target
        // stabilizers
        for (i, b) in self.boundaries.iter().enumerate() {
            for (l, row) in b.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    let target_stab = &self.cells[i][l].stabilizer;
                    for s in &self.cells[i + 1][j].stabilizer {
                        let moved = entry.translate(s, &self.group);
                        let diff = moved.sub(entry);
                        if !diff.reduce_mod(target_stab, &self.group).is_zero() {
                            return Err(Error::invalid(format!(
                                "boundary entry ({l},{j}) in degree {} is not equivariant",
                                i + 1
                            )));
                        }
                    }
                }
            }
        }
        // composite of consecutive boundaries vanishes modulo stabilizers
        for i in 0..self.boundaries.len().saturating_sub(1) {
            let low = &self.boundaries[i];
            let high = &self.boundaries[i + 1];
            for m in 0..self.cells[i].len() {
                for j in 0..self.cells[i + 2].len() {
                    let mut acc = GroupAlgebraElem::zero();
                    for l in 0..self.cells[i + 1].len() {
                        acc = acc.add(&low[m][l].mul(&high[l][j], &self.group));
                    }
                    if !acc
                        .reduce_mod(&self.cells[i][m].stabilizer, &self.group)
                        .is_zero()
                    {
                        return Err(Error::NotAComplex { degree: i + 2 });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn top_degree(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn num_cells(&self, degree: usize) -> usize {
        self.cells[degree].len()
    }

    /// Complex dimension of degree i over the complex numbers:
    /// sum over cells of the orbit size |G| / |Stab|.
    pub fn total_dimension(&self, degree: usize) -> u64 {
        self.cells[degree]
            .iter()
            .map(|c| self.group.order() / subgroup_elements(&self.group, &c.stabilizer).len() as u64)
            .sum()
    }

    /// Whether a character is trivial on a cell's stabilizer.
    fn survives(&self, xi: &Character, cell: &EquivariantCell) -> bool {
        cell.stabilizer
            .iter()
            .all(|s| self.group.pairing_is_trivial(xi, s))
    }

    /// The character component as a based complex over Q(zeta_n): basis
    /// cells are those whose stabilizer the character kills, boundary
    /// entries are the character applied to the group-algebra coefficients.
    pub fn isotypic_project(&self, xi: &Character) -> Result<BasedChainComplex<CyclotomicNumber>, Error> {
        let n = self.group.exponent();
        let one = CyclotomicNumber::one(n);
        let surviving: Vec<Vec<usize>> = self
            .cells
            .iter()
            .map(|cells| {
                cells
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| self.survives(xi, c))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = surviving.iter().map(Vec::len).collect();
        let mut boundaries = Vec::new();
        for (i, b) in self.boundaries.iter().enumerate() {
            let rows = &surviving[i];
            let cols = &surviving[i + 1];
            let mut m = FieldMatrix::zero(rows.len(), cols.len(), one.clone());
            for (r, &l) in rows.iter().enumerate() {
                for (c, &j) in cols.iter().enumerate() {
                    m.set(r, c, b[l][j].apply_character(xi, &self.group)?);
                }
            }
            boundaries.push(m);
        }
        BasedChainComplex::new(dims, boundaries, one)
    }

    /// Checks that character-component dimensions sum to the total complex
    /// dimension in every degree.
    pub fn dimensions_decompose(&self) -> Result<bool, Error> {
        let dual = self.group.dual();
        for degree in 0..=self.top_degree() {
            let mut sum = 0u64;
            for xi in &dual {
                sum += self.cells[degree]
                    .iter()
                    .filter(|c| self.survives(xi, c))
                    .count() as u64;
            }
            if sum != self.total_dimension(degree) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
