//! Finite abelian groups in invariant-factor form, their elements,
//! characters and the Pontryagin dual, plus the covering data tying group
//! elements to link meridians.

use num::{BigInt, One};

use crate::algebra::cyclotomic::CyclotomicNumber;
use crate::algebra::intmat::{cokernel_order, smith_decomposition, IntMatrix};
use crate::error::Error;

/// A finite abelian group stored as its invariant factors
/// `d_1 | d_2 | ... | d_r`, each at least 2. The trivial group has no
/// factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: vec![] }
    }

    /// Builds the group from an arbitrary list of cyclic summand orders,
    /// normalizing to invariant-factor form. Returns the group together
    /// with the change of basis: `convert` maps coordinates in the user's
    /// summand basis to invariant-factor coordinates.
    pub fn from_summands(orders: &[u64]) -> Result<(Self, CoordinateMap), Error> {
        if orders.contains(&0) {
            return Err(Error::invalid("summand orders must be positive"));
        }
        let r = orders.len();
        let mut diag = IntMatrix::zero(r, r);
        for (i, &d) in orders.iter().enumerate() {
            diag.set(i, i, BigInt::from(d));
        }
        let dec = smith_decomposition(&diag);
        // all diagonal entries are nonzero, so rank == r; keep factors > 1
        let mut keep = Vec::new();
        let mut factors = Vec::new();
        for (k, f) in dec.factors.iter().enumerate() {
            if !f.is_one() {
                let v = u64::try_from(f)
                    .map_err(|_| Error::TooLarge {
                        detail: "group factor exceeds u64".into(),
                    })?;
                keep.push(k);
                factors.push(v);
            }
        }
        let group = FiniteAbelianGroup { factors };
        let map = CoordinateMap {
            u: dec.u,
            keep,
            group: group.clone(),
        };
        Ok((group, map))
    }

    /// Invariant factors, smallest first.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// The exponent of the group, also the conductor used for all character
    /// values. 1 for the trivial group.
    pub fn exponent(&self) -> u32 {
        self.factors.last().copied().unwrap_or(1) as u32
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.factors.len()],
        }
    }

    pub fn element(&self, coords: &[i64]) -> Result<GroupElement, Error> {
        if coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "element needs {} coordinates, got {}",
                    self.factors.len(),
                    coords.len()
                ),
            });
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
                .collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &d)| (d - x) % d)
                .collect(),
        }
    }

    /// Order of the element in the group.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        self.factors
            .iter()
            .zip(&a.coords)
            .map(|(&d, &c)| {
                if c == 0 {
                    1
                } else {
                    d / gcd_u64(d, c)
                }
            })
            .fold(1, lcm_u64)
    }

    /// All group elements in lexicographic coordinate order, identity first.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut coords = vec![0u64; self.factors.len()];
        loop {
            out.push(GroupElement {
                coords: coords.clone(),
            });
            let mut i = self.factors.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < self.factors[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }

    /// The full Pontryagin dual in lexicographic order of exponent vectors,
    /// the trivial character first.
    pub fn dual(&self) -> Vec<Character> {
        self.elements()
            .into_iter()
            .map(|e| Character { exps: e.coords })
            .collect()
    }

    /// Value of the pairing as an exponent of zeta_n, n the group exponent:
    /// `xi(g) = zeta_n^pairing`.
    pub fn pairing_exponent(&self, xi: &Character, g: &GroupElement) -> u64 {
        let n = self.exponent() as u64;
        if n == 1 {
            return 0;
        }
        let mut acc: u64 = 0;
        for ((&e, &c), &d) in xi.exps.iter().zip(&g.coords).zip(&self.factors) {
            // zeta_n^((n/d) * e * c), all mod n
            let step = (n / d) % n;
            acc = (acc + (step * ((e * c) % d)) % n) % n;
        }
        acc
    }

    /// Evaluates the character at a group element, in Q(zeta_n) with n the
    /// group exponent.
    pub fn character_eval(&self, xi: &Character, g: &GroupElement) -> Result<CyclotomicNumber, Error> {
        if xi.exps.len() != self.factors.len() || g.coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                context: "character/element rank".into(),
            });
        }
        Ok(CyclotomicNumber::root_of_unity(
            self.exponent(),
            self.pairing_exponent(xi, g) as i64,
        ))
    }

    /// Whether `xi(g) = 1` without leaving integer arithmetic.
    pub fn pairing_is_trivial(&self, xi: &Character, g: &GroupElement) -> bool {
        self.pairing_exponent(xi, g) == 0
    }

    /// The complex-conjugate character.
    pub fn conj_character(&self, xi: &Character) -> Character {
        Character {
            exps: xi
                .exps
                .iter()
                .zip(&self.factors)
                .map(|(&e, &d)| (d - e) % d)
                .collect(),
        }
    }
}

/// Element of a [`FiniteAbelianGroup`], coordinates reduced modulo the
/// invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// A character of the group, determined by its exponents on the canonical
/// generators: the i-th generator maps to `zeta_n^((n/d_i) * exps[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    exps: Vec<u64>,
}

impl Character {
    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// Conversion of user summand coordinates into invariant-factor coordinates.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    u: IntMatrix,
    keep: Vec<usize>,
    group: FiniteAbelianGroup,
}

impl CoordinateMap {
    pub fn convert(&self, coords: &[i64]) -> Result<GroupElement, Error> {
        if coords.len() != self.u.rows() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "meridian image needs {} coordinates, got {}",
                    self.u.rows(),
                    coords.len()
                ),
            });
        }
        let mut new = Vec::with_capacity(self.keep.len());
        for (slot, &k) in self.keep.iter().enumerate() {
            let mut acc = BigInt::from(0);
            for (j, &c) in coords.iter().enumerate() {
                acc += self.u.get(k, j) * BigInt::from(c);
            }
            let d = BigInt::from(self.group.invariant_factors()[slot]);
            let r = ((acc % &d) + &d) % &d;
            new.push(u64::try_from(&r).expect("reduced residue fits"));
        }
        Ok(GroupElement { coords: new })
    }
}

/// Covering data: the target group and the image of each component's
/// meridian under the defining epimorphism.
#[derive(Clone, Debug)]
pub struct CoveringSpec {
    pub group: FiniteAbelianGroup,
    pub meridian_images: Vec<GroupElement>,
}

impl CoveringSpec {
    pub fn new(group: FiniteAbelianGroup, meridian_images: Vec<GroupElement>) -> Self {
        CoveringSpec {
            group,
            meridian_images,
        }
    }

    /// True iff the meridian images generate the group: the subgroup they
    /// generate has the full order, decided by Smith normal form of the
    /// presentation of the quotient.
    pub fn is_surjective(&self) -> bool {
        let r = self.group.rank();
        let mu = self.meridian_images.len();
        if r == 0 {
            return true;
        }
        // quotient of G by the images: cokernel of [diag(d) | images]
        let mut m = IntMatrix::zero(r, r + mu);
        for (i, &d) in self.group.invariant_factors().iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        for (j, g) in self.meridian_images.iter().enumerate() {
            for (i, &c) in g.coords().iter().enumerate() {
                m.set(i, r + j, BigInt::from(c));
            }
        }
        cokernel_order(&m).is_one()
    }

    /// The support of a character: indices of components whose meridian it
    /// sends to a value distinct from 1. Empty for the trivial character.
    pub fn character_support(&self, xi: &Character) -> Vec<usize> {
        self.meridian_images
            .iter()
            .enumerate()
            .filter(|(_, g)| !self.group.pairing_is_trivial(xi, g))
            .map(|(i, _)| i)
            .collect()
    }

    /// The unique supported component when the support is a singleton.
    pub fn single_component(&self, xi: &Character) -> Option<usize> {
        let s = self.character_support(xi);
        if s.len() == 1 {
            Some(s[0])
        } else {
            None
        }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(d: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_summands(&[d]).unwrap().0
    }

    #[test]
    fn dual_of_z2_and_z2z2() {
        let g = cyclic(2);
        let dual = g.dual();
        assert_eq!(dual.len(), 2);
        assert!(dual[0].is_trivial());
        let gen = g.element(&[1]).unwrap();
        assert!(g
            .character_eval(&dual[1], &gen)
            .unwrap()
            .add(&CyclotomicNumber::one(2))
            .unwrap()
            .is_zero());

        let (g22, _) = FiniteAbelianGroup::from_summands(&[2, 2]).unwrap();
        assert_eq!(g22.dual().len(), 4);
    }

    #[test]
    fn dual_of_z6_sends_generator_to_zeta6() {
        let g = cyclic(6);
        let dual = g.dual();
        assert_eq!(dual.len(), 6);
        let xi = &dual[1];
        assert_eq!(xi.exps(), &[1]);
        let gen = g.element(&[1]).unwrap();
        assert_eq!(
            g.character_eval(xi, &gen).unwrap(),
            CyclotomicNumber::root_of_unity(6, 1)
        );
    }

    #[test]
    fn character_eval_reduces_exponents() {
        let g = cyclic(4);
        let xi = &g.dual()[1];
        let two = g.element(&[2]).unwrap();
        // zeta_4^2 = -1
        assert_eq!(
            g.character_eval(xi, &two).unwrap(),
            CyclotomicNumber::one(4).neg()
        );
        let trivial = &g.dual()[0];
        assert!(g.character_eval(trivial, &two).unwrap().is_one());
    }

    #[test]
    fn summand_normalization() {
        let (g, map) = FiniteAbelianGroup::from_summands(&[2, 3]).unwrap();
        assert_eq!(g.invariant_factors(), &[6]);
        // (1,1) generates Z/2 + Z/3 = Z/6
        let e = map.convert(&[1, 1]).unwrap();
        assert_eq!(g.element_order(&e), 6);
        let (g2, _) = FiniteAbelianGroup::from_summands(&[4, 2]).unwrap();
        assert_eq!(g2.invariant_factors(), &[2, 4]);
        let (t, _) = FiniteAbelianGroup::from_summands(&[1, 1]).unwrap();
        assert_eq!(t, FiniteAbelianGroup::trivial());
        assert_eq!(t.exponent(), 1);
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn surjectivity_checks() {
        let (g22, _) = FiniteAbelianGroup::from_summands(&[2, 2]).unwrap();
        let spec = CoveringSpec::new(
            g22.clone(),
            vec![
                g22.element(&[1, 0]).unwrap(),
                g22.element(&[0, 1]).unwrap(),
            ],
        );
        assert!(spec.is_surjective());

        let g4 = cyclic(4);
        let not_onto = CoveringSpec::new(g4.clone(), vec![g4.element(&[2]).unwrap()]);
        assert!(!not_onto.is_surjective());

        let g5 = cyclic(5);
        let onto = CoveringSpec::new(
            g5.clone(),
            vec![g5.element(&[1]).unwrap(), g5.element(&[1]).unwrap()],
        );
        assert!(onto.is_surjective());
    }

    #[test]
    fn supports_and_single_components() {
        let g2 = cyclic(2);
        let spec = CoveringSpec::new(
            g2.clone(),
            vec![g2.element(&[1]).unwrap(), g2.element(&[1]).unwrap()],
        );
        let dual = g2.dual();
        assert!(spec.character_support(&dual[0]).is_empty());
        assert_eq!(spec.character_support(&dual[1]), vec![0, 1]);
        assert_eq!(spec.single_component(&dual[1]), None);

        let (g22, _) = FiniteAbelianGroup::from_summands(&[2, 2]).unwrap();
        let spec22 = CoveringSpec::new(
            g22.clone(),
            vec![
                g22.element(&[1, 0]).unwrap(),
                g22.element(&[0, 1]).unwrap(),
            ],
        );
        let dual22 = g22.dual();
        // character (1,0) pairs nontrivially with (1,0) only
        let xi = dual22
            .iter()
            .find(|x| x.exps() == [1, 0])
            .unwrap();
        assert_eq!(spec22.character_support(xi), vec![0]);
        assert_eq!(spec22.single_component(xi), Some(0));
    }

    #[test]
    fn dual_is_closed_and_separating() {
        for factors in [vec![4u64], vec![2, 2], vec![2, 6]] {
            let (g, _) = FiniteAbelianGroup::from_summands(&factors).unwrap();
            let dual = g.dual();
            assert_eq!(dual.len() as u64, g.order());
            // distinctness
            for i in 0..dual.len() {
                for j in i + 1..dual.len() {
                    assert_ne!(dual[i], dual[j]);
                }
            }
            // closure under pointwise product = coordinate sum of exps
            for a in &dual {
                for b in &dual {
                    let prod = Character {
                        exps: a
                            .exps()
                            .iter()
                            .zip(b.exps())
                            .zip(g.invariant_factors())
                            .map(|((&x, &y), &d)| (x + y) % d)
                            .collect(),
                    };
                    assert!(dual.contains(&prod));
                }
                // conjugate closure
                assert!(dual.contains(&g.conj_character(a)));
            }
            // separation: each nonidentity element is detected
            for e in g.elements().iter().skip(1) {
                assert!(dual.iter().any(|xi| !g.pairing_is_trivial(xi, e)));
            }
        }
    }

    #[test]
    fn conjugate_character_has_the_same_support() {
        let (g, _) = FiniteAbelianGroup::from_summands(&[2, 6]).unwrap();
        let spec = CoveringSpec::new(
            g.clone(),
            vec![
                g.element(&[1, 0]).unwrap(),
                g.element(&[0, 1]).unwrap(),
                g.element(&[1, 3]).unwrap(),
            ],
        );
        for xi in &g.dual() {
            let bar = g.conj_character(xi);
            assert_eq!(
                spec.character_support(xi),
                spec.character_support(&bar)
            );
        }
    }

    #[test]
    fn character_orthogonality() {
        let (g, _) = FiniteAbelianGroup::from_summands(&[12]).unwrap();
        let dual = g.dual();
        for e in g.elements() {
            let mut sum = CyclotomicNumber::zero(g.exponent());
            for xi in &dual {
                sum = sum.add(&g.character_eval(xi, &e).unwrap()).unwrap();
            }
            if e == g.identity() {
                assert_eq!(sum.to_integer().unwrap(), BigInt::from(g.order()));
            } else {
                assert!(sum.is_zero());
            }
        }
    }
}
