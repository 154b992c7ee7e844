//! Wirtinger presentations of link groups from braid closures.
//!
//! Each arc of the closed-braid diagram becomes a generator tagged with its
//! component; each crossing contributes one conjugation relator. Closure
//! identifications are performed by merging generators, so the presentation
//! has exactly one generator per arc.

use crate::algebra::intmat::{smith_normal_form, IntMatrix};
use crate::error::Error;
use num::One;

use super::braid::LinkDiagram;

/// A word in the generators: (generator index, +1 or -1), reduced freely on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(Vec<(usize, i8)>);

impl Word {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        let mut w = Word(Vec::with_capacity(letters.len()));
        for (g, e) in letters {
            debug_assert!(e == 1 || e == -1);
            w.push(g, e);
        }
        w
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    fn push(&mut self, g: usize, e: i8) {
        if let Some(&(lg, le)) = self.0.last() {
            if lg == g && le == -e {
                self.0.pop();
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &rhs.0 {
            out.push(g, e);
        }
        out
    }

    /// Exponent sum of each generator, for abelianization.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; num_generators];
        for &(g, e) in &self.0 {
            sums[g] += e as i64;
        }
        sums
    }
}

/// Presentation of the link group with one generator per arc and one relator
/// per crossing.
#[derive(Clone, Debug)]
pub struct WirtingerPresentation {
    /// Component tag of each generator.
    component_of: Vec<usize>,
    relators: Vec<Word>,
    num_components: usize,
}

impl WirtingerPresentation {
    pub fn num_generators(&self) -> usize {
        self.component_of.len()
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    pub fn component_of(&self, generator: usize) -> usize {
        self.component_of[generator]
    }

    pub fn component_tags(&self) -> &[usize] {
        &self.component_of
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// A designated meridian generator for each component: the first arc of
    /// that component.
    pub fn meridian_generator(&self, component: usize) -> Result<usize, Error> {
        self.component_of
            .iter()
            .position(|&c| c == component)
            .ok_or_else(|| Error::BadPresentation {
                detail: format!("component {component} has no generator"),
            })
    }

    /// The abelianized relation matrix: rows = generators, columns =
    /// relators, entries exponent sums.
    pub fn abelianized_matrix(&self) -> IntMatrix {
        let n = self.num_generators();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|g| {
                self.relators
                    .iter()
                    .map(|r| r.exponent_sums(n)[g])
                    .collect()
            })
            .collect();
        if self.relators.is_empty() {
            IntMatrix::zero(n, 0)
        } else {
            IntMatrix::from_rows(&rows)
        }
    }

    /// Verifies that the abelianization is free of rank = number of
    /// components: every invariant factor 1 and free rank mu.
    pub fn abelianization_is_free_of_link_rank(&self) -> bool {
        let m = self.abelianized_matrix();
        let (factors, rank) = smith_normal_form(&m);
        factors.iter().all(One::is_one)
            && self.num_generators() - rank == self.num_components
    }
}

/// Builds the Wirtinger presentation of the closure.
///
/// Arc labels are tracked through the braid: each crossing creates one new
/// arc for the outgoing understrand with relator `new = over^s under
/// over^-s`; closing the braid identifies top and bottom labels.
pub fn wirtinger(diagram: &LinkDiagram) -> WirtingerPresentation {
    let k = diagram.braid().strands();
    let letters = diagram.braid().letters();
    let total = k + letters.len();

    // union-find over provisional arc labels
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }

    // provisional label at each position, and the strand occupying it
    let mut label: Vec<usize> = (0..k).collect();
    let mut at: Vec<usize> = (0..k).collect();
    let mut strand_of_label: Vec<usize> = (0..k).collect();
    // raw relators over provisional labels
    let mut raw: Vec<[(usize, i8); 4]> = Vec::with_capacity(letters.len());

    for (step, &l) in letters.iter().enumerate() {
        let i = (l.unsigned_abs() as usize) - 1;
        let fresh = k + step;
        let (a, b) = (label[i], label[i + 1]);
        if l > 0 {
            // strand at position i passes over: fresh = a b a^-1
            raw.push([(a, 1), (b, 1), (a, -1), (fresh, -1)]);
            strand_of_label.push(at[i + 1]);
            label[i] = fresh;
            label[i + 1] = a;
        } else {
            // strand at position i+1 passes over: fresh = b^-1 a b
            raw.push([(b, -1), (a, 1), (b, 1), (fresh, -1)]);
            strand_of_label.push(at[i]);
            label[i + 1] = fresh;
            label[i] = b;
        }
        at.swap(i, i + 1);
    }

    // closure: the top label at position j is the bottom arc j
    for j in 0..k {
        let a = find(&mut parent, label[j]);
        let b = find(&mut parent, j);
        if a != b {
            parent[a] = b;
        }
    }

    // compress classes to consecutive generator indices
    let mut index_of_root: Vec<Option<usize>> = vec![None; total];
    let mut component_of: Vec<usize> = Vec::new();
    let mut gen_of_label = vec![0usize; total];
    for lab in 0..total {
        let root = find(&mut parent, lab);
        let idx = match index_of_root[root] {
            Some(i) => i,
            None => {
                let i = component_of.len();
                index_of_root[root] = Some(i);
                component_of.push(diagram.component_of_strand(strand_of_label[root]));
                i
            }
        };
        gen_of_label[lab] = idx;
    }

    let mut relators = Vec::new();
    for r in raw {
        let w = Word::new(r.iter().map(|&(lab, e)| (gen_of_label[lab], e)).collect());
        if !w.is_empty() {
            relators.push(w);
        }
    }

    WirtingerPresentation {
        component_of,
        relators,
        num_components: diagram.num_components(),
    }
}
