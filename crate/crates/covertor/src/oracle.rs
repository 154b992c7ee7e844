//! Brute-force computation of the branched cover's first homology order.
//!
//! The covering subgroup of the link group is rewritten by the
//! Reidemeister-Schreier procedure over the regular coset table of the
//! abelian quotient; adjoining one lifted meridian relation per branching
//! orbit and abelianizing gives a presentation matrix whose Smith normal
//! form yields the order. This route never touches Alexander polynomials,
//! so it serves as an independent check of the character-sum formula.

use num::{BigInt, One};

use crate::abelian::CoveringSpec;
use crate::algebra::intmat::{smith_normal_form, IntMatrix};
use crate::error::Error;
use crate::link::{Word, WirtingerPresentation};

/// Regular coset table of the covering: cosets are the group elements in
/// enumeration order (identity first); each presentation generator acts by
/// translation by its component's meridian image.
#[derive(Clone, Debug)]
pub struct CosetTable {
    num_cosets: usize,
    /// transitions[g][c] = coset index of c * pi(generator g)
    transitions: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn step(&self, coset: usize, generator: usize) -> usize {
        self.transitions[generator][coset]
    }

    /// Inverse transition: the coset d with d * pi(g) = coset.
    pub fn step_back(&self, coset: usize, generator: usize) -> usize {
        self.transitions[generator]
            .iter()
            .position(|&t| t == coset)
            .expect("transitions are permutations")
    }
}

/// Builds the coset table; the covering must be surjective.
pub fn coset_table(p: &WirtingerPresentation, spec: &CoveringSpec) -> Result<CosetTable, Error> {
    if spec.meridian_images.len() != p.num_components() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "{} components need {} meridian images, got {}",
                p.num_components(),
                p.num_components(),
                spec.meridian_images.len()
            ),
        });
    }
    if !spec.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let elements = spec.group.elements();
    let index_of = |e: &crate::abelian::GroupElement| -> usize {
        elements
            .iter()
            .position(|x| x == e)
            .expect("element enumeration is complete")
    };
    let transitions = (0..p.num_generators())
        .map(|g| {
            let image = &spec.meridian_images[p.component_of(g)];
            elements
                .iter()
                .map(|c| index_of(&spec.group.add(c, image)))
                .collect()
        })
        .collect();
    Ok(CosetTable {
        num_cosets: elements.len(),
        transitions,
    })
}

/// Presentation of the covering subgroup: Schreier generators indexed by
/// (coset, base generator) pairs off the spanning tree, and one rewritten
/// relator per (base relator, coset) pair.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    /// The (coset, generator) label of each Schreier generator.
    pub generators: Vec<(usize, usize)>,
    pub relators: Vec<Word>,
    /// Schreier index of each non-tree (coset, generator) pair.
    schreier_index: Vec<Vec<Option<usize>>>,
}

impl SubgroupPresentation {
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Rewrites a word of the base group, starting at the given coset, into
    /// the Schreier generators. The word must lie in the subgroup (return to
    /// the starting coset) for the result to be a relator; this is not
    /// checked here.
    pub fn rewrite(&self, table: &CosetTable, word: &Word, start: usize) -> Word {
        let mut out = Vec::new();
        let mut coset = start;
        for &(g, e) in word.letters() {
            if e == 1 {
                if let Some(idx) = self.schreier_index[coset][g] {
                    out.push((idx, 1));
                }
                coset = table.step(coset, g);
            } else {
                let back = table.step_back(coset, g);
                if let Some(idx) = self.schreier_index[back][g] {
                    out.push((idx, -1));
                }
                coset = back;
            }
        }
        Word::new(out)
    }
}

/// Reidemeister-Schreier rewriting over the table. The spanning tree is
/// grown breadth-first from the identity coset, exploring generators in
/// index order, so the output is deterministic.
pub fn reidemeister_schreier(
    table: &CosetTable,
    p: &WirtingerPresentation,
) -> SubgroupPresentation {
    let n_cosets = table.num_cosets();
    let n_gens = p.num_generators();

    // BFS spanning tree: tree[c] = true marks (coset, gen) pairs whose
    // Schreier generator is trivial
    let mut on_tree = vec![vec![false; n_gens]; n_cosets];
    let mut visited = vec![false; n_cosets];
    visited[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..n_gens {
            let d = table.step(c, g);
            if !visited[d] {
                visited[d] = true;
                on_tree[c][g] = true;
                queue.push_back(d);
            }
        }
    }
    debug_assert!(visited.iter().all(|&v| v), "surjectivity gives transitivity");

    let mut generators = Vec::new();
    let mut schreier_index = vec![vec![None; n_gens]; n_cosets];
    for c in 0..n_cosets {
        for g in 0..n_gens {
            if !on_tree[c][g] {
                schreier_index[c][g] = Some(generators.len());
                generators.push((c, g));
            }
        }
    }

    let sub = SubgroupPresentation {
        generators,
        relators: Vec::new(),
        schreier_index,
    };
    let mut relators = Vec::new();
    for rel in p.relators() {
        for c in 0..n_cosets {
            let w = sub.rewrite(table, rel, c);
            relators.push(w);
        }
    }
    SubgroupPresentation { relators, ..sub }
}

/// Lifted meridian relations: for each component, the meridian word raised
/// to the order of its image, rewritten once per orbit of that image acting
/// on the cosets.
pub fn lifted_meridian_words(
    table: &CosetTable,
    sub: &SubgroupPresentation,
    p: &WirtingerPresentation,
    spec: &CoveringSpec,
) -> Result<Vec<Word>, Error> {
    let mut words = Vec::new();
    for comp in 0..p.num_components() {
        let gen = p.meridian_generator(comp)?;
        let order = spec.group.element_order(&spec.meridian_images[comp]) as usize;
        let meridian_power = Word::new(vec![(gen, 1); order]);
        // orbits of translation by the image on cosets = orbits of `step`
        let mut covered = vec![false; table.num_cosets()];
        for start in 0..table.num_cosets() {
            if covered[start] {
                continue;
            }
            let mut c = start;
            loop {
                covered[c] = true;
                c = table.step(c, gen);
                if c == start {
                    break;
                }
            }
            words.push(sub.rewrite(table, &meridian_power, start));
        }
    }
    Ok(words)
}

/// Result of an oracle run.
#[derive(Clone, Debug)]
pub struct OracleResult {
    /// |H_1| of the branched cover, 0 when infinite.
    pub order: BigInt,
    /// Invariant factors of the abelianized presentation (entries > 1).
    pub invariant_factors: Vec<BigInt>,
    /// Free rank of the homology.
    pub free_rank: usize,
}

/// Abelianizes the subgroup presentation together with the lifted meridian
/// relations and reads the branched cover's first homology off the Smith
/// normal form.
pub fn branched_h1(sub: &SubgroupPresentation, lifted_meridians: &[Word]) -> OracleResult {
    let n = sub.num_generators();
    let mut columns: Vec<Vec<i64>> = Vec::new();
    for w in sub.relators.iter().chain(lifted_meridians) {
        if w.is_empty() {
            continue;
        }
        columns.push(w.exponent_sums(n));
    }
    let mut m = IntMatrix::zero(n, columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            m.set(i, j, BigInt::from(v));
        }
    }
    let (factors, rank) = smith_normal_form(&m);
    let free_rank = n - rank;
    let order = if free_rank > 0 {
        BigInt::from(0)
    } else {
        factors.iter().product()
    };
    OracleResult {
        order,
        invariant_factors: factors.into_iter().filter(|f| !f.is_one()).collect(),
        free_rank,
    }
}

/// Unbranched first homology of the covering of the exterior, as
/// (free rank, invariant factors > 1).
pub fn unbranched_h1(sub: &SubgroupPresentation) -> (usize, Vec<BigInt>) {
    let res = branched_h1(sub, &[]);
    (res.free_rank, res.invariant_factors)
}

/// Whole pipeline: coset table, rewriting, lifted meridians, Smith form.
/// Rejects inputs whose rewritten presentation would be unreasonably large
/// for exact arithmetic.
pub fn oracle_order(p: &WirtingerPresentation, spec: &CoveringSpec) -> Result<OracleResult, Error> {
    let size = spec.group.order() as usize * p.relators().len().max(1);
    if size > 10_000 {
        return Err(Error::TooLarge {
            detail: format!(
                "|G| * relators = {size} exceeds the 10000 limit for the oracle"
            ),
        });
    }
    let table = coset_table(p, spec)?;
    let sub = reidemeister_schreier(&table, p);
    debug_assert_eq!(
        sub.num_generators(),
        table.num_cosets() * p.num_generators() - (table.num_cosets() - 1)
    );
    debug_assert_eq!(
        sub.relators.len(),
        table.num_cosets() * p.relators().len()
    );
    let lifted = lifted_meridian_words(&table, &sub, p, spec)?;
    Ok(branched_h1(&sub, &lifted))
}
