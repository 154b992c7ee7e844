//! Multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so every value is
//! canonical: equal polynomials have identical term maps and no zero
//! coefficient is ever stored. The unit group of the ring is the set of
//! signed monomials; [`LaurentPoly::normalize`] picks a canonical
//! representative of each unit orbit.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::Error;

use super::cyclotomic::CyclotomicNumber;

/// Sparse Laurent polynomial in `nvars` variables over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The monomial `c * t_var^exp`.
    pub fn monomial(nvars: usize, var: usize, exp: i64, c: BigInt) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut p = LaurentPoly::zero(nvars);
        if !c.is_zero() {
            let mut e = vec![0; nvars];
            e[var] = exp;
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `t_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        LaurentPoly::monomial(nvars, var, 1, BigInt::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.nvars])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, rhs: &LaurentPoly) -> Result<(), Error> {
        if self.nvars != rhs.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: rhs.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(rhs)?;
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the monomial with the given exponent shift.
    pub fn shift(&self, delta: &[i64]) -> LaurentPoly {
        assert_eq!(delta.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(delta).map(|(x, d)| x + d).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Per-variable minimum exponent over all terms. `None` for the zero
    /// polynomial.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut mins = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        Some(mins)
    }

    /// Canonical representative of the unit orbit `{±monomial} · p`: every
    /// variable's minimal exponent becomes 0 and the coefficient of the
    /// lexicographically smallest term becomes positive.
    pub fn normalize(&self) -> LaurentPoly {
        let Some(mins) = self.min_exponents() else {
            return self.clone();
        };
        let delta: Vec<i64> = mins.iter().map(|m| -m).collect();
        let shifted = self.shift(&delta);
        let lead_negative = shifted
            .terms
            .iter()
            .next()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if lead_negative {
            shifted.neg()
        } else {
            shifted
        }
    }

    /// Exact division in the Laurent ring. Returns `None` when `rhs` does not
    /// divide `self`.
    pub fn exact_div(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        if self.nvars != rhs.nvars {
            return None;
        }
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.nvars));
        }
        // shift both to ordinary polynomials; the quotient shift is the difference
        let amin = self.min_exponents().unwrap();
        let bmin = rhs.min_exponents().unwrap();
        let a = self.shift(&amin.iter().map(|m| -m).collect::<Vec<_>>());
        let b = rhs.shift(&bmin.iter().map(|m| -m).collect::<Vec<_>>());

        let (bexp, bcoef) = b.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = a;
        let mut quo = LaurentPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rexp, rcoef) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            let qexp: Vec<i64> = rexp.iter().zip(&bexp).map(|(x, y)| x - y).collect();
            if qexp.iter().any(|&e| e < 0) {
                return None;
            }
            let (qcoef, r) = rcoef.div_rem(&bcoef);
            if !r.is_zero() {
                return None;
            }
            let mono = LaurentPoly::from_terms(self.nvars, [(qexp, qcoef)]);
            rem = rem.sub(&mono.mul(&b).ok()?).ok()?;
            quo = quo.add(&mono).ok()?;
        }
        let delta: Vec<i64> = amin.iter().zip(&bmin).map(|(x, y)| x - y).collect();
        Some(quo.shift(&delta))
    }

    /// Greatest common divisor in the Laurent UFD, reported in normalized
    /// form. Computed by clearing units, then recursive content /
    /// primitive-part reduction one variable at a time.
    pub fn gcd(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(rhs)?;
        if self.is_zero() {
            return Ok(rhs.normalize());
        }
        if rhs.is_zero() {
            return Ok(self.normalize());
        }
        let a = self.normalize();
        let b = rhs.normalize();
        Ok(gcd_ordinary(&a, &b).normalize())
    }

    /// Evaluates at cyclotomic arguments, one per variable. All arguments
    /// must share one conductor and be nonzero (negative exponents invert).
    pub fn eval_cyclotomic(&self, args: &[CyclotomicNumber]) -> Result<CyclotomicNumber, Error> {
        if args.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "evaluation needs {} arguments, got {}",
                    self.nvars,
                    args.len()
                ),
            });
        }
        let conductor = args
            .first()
            .map(CyclotomicNumber::conductor)
            .unwrap_or(1);
        for (i, a) in args.iter().enumerate() {
            if a.conductor() != conductor {
                return Err(Error::ConductorMismatch {
                    left: conductor,
                    right: a.conductor(),
                });
            }
            if a.is_zero() {
                return Err(Error::ZeroArgument { index: i });
            }
        }
        let inverses: Vec<CyclotomicNumber> = args
            .iter()
            .map(|a| a.inv())
            .collect::<Result<_, _>>()?;
        let mut acc = CyclotomicNumber::zero(conductor);
        for (e, c) in &self.terms {
            let mut term = CyclotomicNumber::from_bigint(conductor, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&args[i].pow(exp as u64)?)?;
                } else if exp < 0 {
                    term = term.mul(&inverses[i].pow(exp.unsigned_abs())?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes `t_i -> 1/t_i` for every variable.
    pub fn invert_vars(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients, i.e. the value at `t_i = 1` for all `i`.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renders with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let mut pieces: Vec<String> = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => pieces.push(names[i].clone()),
                    _ => pieces.push(format!("{}^{}", names[i], exp)),
                }
            }
            let mag = c.abs();
            let coef = if !mag.is_one() || pieces.is_empty() {
                Some(mag.to_string())
            } else {
                None
            };
            let body = match (coef, pieces.is_empty()) {
                (Some(k), true) => k,
                (Some(k), false) => format!("{}*{}", k, pieces.join("*")),
                (None, _) => pieces.join("*"),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("t{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

/// gcd of two nonzero polynomials whose exponents are all nonnegative.
fn gcd_ordinary(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let n = a.nvars();
    if n == 0 {
        let ca = a.terms.values().next().cloned().unwrap_or_else(BigInt::zero);
        let cb = b.terms.values().next().cloned().unwrap_or_else(BigInt::zero);
        return LaurentPoly::constant(0, ca.gcd(&cb));
    }
    let ua = to_univariate(a);
    let ub = to_univariate(b);
    let (cont_a, pp_a) = content_and_primitive(&ua, n - 1);
    let (cont_b, pp_b) = content_and_primitive(&ub, n - 1);
    let cont = gcd_ordinary(&cont_a.normalize(), &cont_b.normalize());

    // primitive pseudo-remainder sequence on the primitive parts
    let mut r0 = pp_a;
    let mut r1 = pp_b;
    if degree(&r0) < degree(&r1) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !is_univ_zero(&r1) {
        let rem = pseudo_rem(&r0, &r1, n - 1);
        r0 = r1;
        r1 = if is_univ_zero(&rem) {
            rem
        } else {
            content_and_primitive(&rem, n - 1).1
        };
    }
    let gcd_pp = from_univariate(&r0, n);
    embed(&cont, n).mul(&gcd_pp).expect("same nvars")
}

/// Coefficients of `p` viewed as a univariate polynomial in its last
/// variable; index = degree, entries have `nvars - 1` variables.
type Univ = Vec<LaurentPoly>;

fn to_univariate(p: &LaurentPoly) -> Univ {
    let n = p.nvars();
    let deg = p.terms.keys().map(|e| e[n - 1]).max().unwrap_or(0) as usize;
    let mut coeffs = vec![LaurentPoly::zero(n - 1); deg + 1];
    for (e, c) in &p.terms {
        let d = e[n - 1] as usize;
        coeffs[d].add_term(e[..n - 1].to_vec(), c.clone());
    }
    coeffs
}

fn from_univariate(u: &Univ, nvars: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(nvars);
    for (d, c) in u.iter().enumerate() {
        for (e, k) in &c.terms {
            let mut exp = e.clone();
            exp.push(d as i64);
            out.add_term(exp, k.clone());
        }
    }
    out
}

fn embed(p: &LaurentPoly, nvars: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(nvars);
    for (e, c) in &p.terms {
        let mut exp = e.clone();
        exp.resize(nvars, 0);
        out.add_term(exp, c.clone());
    }
    out
}

fn is_univ_zero(u: &Univ) -> bool {
    u.iter().all(LaurentPoly::is_zero)
}

fn degree(u: &Univ) -> usize {
    u.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn trim(mut u: Univ) -> Univ {
    while u.len() > 1 && u.last().map(LaurentPoly::is_zero).unwrap_or(false) {
        u.pop();
    }
    u
}

/// `(content, primitive part)` with respect to the main variable; the
/// primitive part is returned re-assembled as a full polynomial's univariate
/// coefficient list.
fn content_and_primitive(u: &Univ, sub_vars: usize) -> (LaurentPoly, Univ) {
    let mut cont = LaurentPoly::zero(sub_vars);
    for c in u {
        if c.is_zero() {
            continue;
        }
        cont = if cont.is_zero() {
            c.normalize()
        } else {
            gcd_ordinary(&cont, &c.normalize()).normalize()
        };
    }
    if cont.is_zero() {
        return (cont, u.clone());
    }
    let pp = u
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.exact_div(&cont).expect("content divides coefficients")
            }
        })
        .collect();
    (cont, pp)
}

/// Pseudo-remainder of `a` by `b` in the main variable: the remainder of
/// `lc(b)^(da-db+1) * a` under univariate division, all coefficient
/// arithmetic exact in the subring.
fn pseudo_rem(a: &Univ, b: &Univ, sub_vars: usize) -> Univ {
    let da = degree(a);
    let db = degree(b);
    if is_univ_zero(a) || da < db {
        return a.clone();
    }
    let lc_b = b[db].clone();
    let mut rem = a.clone();
    let mut steps = da - db + 1;
    while !is_univ_zero(&rem) && degree(&rem) >= db {
        let dr = degree(&rem);
        let lc_r = rem[dr].clone();
        // rem = lc_b * rem - lc_r * x^(dr-db) * b
        let mut next = vec![LaurentPoly::zero(sub_vars); dr.max(1)];
        for (d, c) in rem.iter().enumerate() {
            if d == dr {
                continue;
            }
            next[d] = c.mul(&lc_b).expect("same nvars");
        }
        for (d, c) in b.iter().enumerate().take(db) {
            let shifted_deg = d + dr - db;
            let sub = c.mul(&lc_r).expect("same nvars");
            next[shifted_deg] = next[shifted_deg].sub(&sub).expect("same nvars");
        }
        rem = trim(next);
        steps -= 1;
        if steps == 0 {
            break;
        }
    }
    // if the loop exited early, multiply by remaining powers of lc_b so the
    // pseudo-remainder identity stays exact
    for _ in 0..steps {
        if is_univ_zero(&rem) {
            break;
        }
        for c in rem.iter_mut() {
            *c = c.mul(&lc_b).expect("same nvars");
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(nvars: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(nvars, i)
    }

    fn c(nvars: usize, k: i64) -> LaurentPoly {
        LaurentPoly::constant(nvars, BigInt::from(k))
    }

    #[test]
    fn difference_of_squares() {
        let a = t(1, 0).sub(&c(1, 1)).unwrap();
        let b = t(1, 0).add(&c(1, 1)).unwrap();
        let prod = a.mul(&b).unwrap();
        let expect = t(1, 0).mul(&t(1, 0)).unwrap().sub(&c(1, 1)).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn zero_is_absorbing() {
        let p = t(2, 0).add(&t(2, 1)).unwrap();
        assert!(p.mul(&LaurentPoly::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn laurent_product_with_negative_exponents() {
        // (t1 t2^-1 + 1) * (t1^-1 t2) = 1 + t1^-1 t2
        let a = LaurentPoly::from_terms(
            2,
            [
                (vec![1, -1], BigInt::one()),
                (vec![0, 0], BigInt::one()),
            ],
        );
        let b = LaurentPoly::from_terms(2, [(vec![-1, 1], BigInt::one())]);
        let expect = LaurentPoly::from_terms(
            2,
            [
                (vec![0, 0], BigInt::one()),
                (vec![-1, 1], BigInt::one()),
            ],
        );
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn variable_count_mismatch_is_an_error() {
        assert!(t(1, 0).add(&t(2, 0)).is_err());
    }

    #[test]
    fn normalize_strips_units() {
        // -t1^-2 (t1^2 - t1 + 1) normalizes back to t1^2 - t1 + 1
        let base = LaurentPoly::from_terms(
            1,
            [
                (vec![2], BigInt::from(1)),
                (vec![1], BigInt::from(-1)),
                (vec![0], BigInt::from(1)),
            ],
        );
        let unit_mangled = base.neg().shift(&[-2]);
        assert_eq!(unit_mangled.normalize(), base);
        assert!(LaurentPoly::zero(3).normalize().is_zero());
    }

    #[test]
    fn normalize_two_variable_rule() {
        // -t1^3 t2^-1 + t1^2 t2^-2: shift by t1^-2 t2^2 -> 1 - t1 t2, whose
        // lex-smallest term (0,0) already has positive coefficient.
        let p = LaurentPoly::from_terms(
            2,
            [
                (vec![3, -1], BigInt::from(-1)),
                (vec![2, -2], BigInt::from(1)),
            ],
        );
        let expect = LaurentPoly::from_terms(
            2,
            [
                (vec![0, 0], BigInt::from(1)),
                (vec![1, 1], BigInt::from(-1)),
            ],
        );
        assert_eq!(p.normalize(), expect);
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = LaurentPoly::from_terms(
            2,
            [
                (vec![3, -1], BigInt::from(-7)),
                (vec![2, 2], BigInt::from(5)),
            ],
        );
        let n = p.normalize();
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(t^2-1, t^3-1) = t-1
        let a = LaurentPoly::from_terms(1, [(vec![2], BigInt::one()), (vec![0], -BigInt::one())]);
        let b = LaurentPoly::from_terms(1, [(vec![3], BigInt::one()), (vec![0], -BigInt::one())]);
        let g = a.gcd(&b).unwrap();
        let expect = LaurentPoly::from_terms(1, [(vec![1], BigInt::one()), (vec![0], -BigInt::one())])
            .normalize();
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = t(1, 0).sub(&c(1, 1)).unwrap().neg().shift(&[-3]);
        assert_eq!(p.gcd(&LaurentPoly::zero(1)).unwrap(), p.normalize());
        assert!(LaurentPoly::zero(1)
            .gcd(&LaurentPoly::zero(1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn gcd_two_variables() {
        // gcd((t1-1)(t2+1), (t1-1) t2) = t1-1
        let f = t(2, 0).sub(&c(2, 1)).unwrap();
        let a = f.mul(&t(2, 1).add(&c(2, 1)).unwrap()).unwrap();
        let b = f.mul(&t(2, 1)).unwrap();
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, f.normalize());
        assert!(a.exact_div(&g).is_some());
        assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn gcd_integer_content() {
        let a = c(1, 4);
        let b = t(1, 0).scale(&BigInt::from(2)).sub(&c(1, 2)).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), c(1, 2));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = t(2, 0).sub(&c(2, 1)).unwrap();
        let b = t(2, 1).add(&c(2, 3)).unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        let off = prod.add(&c(2, 1)).unwrap();
        assert!(off.exact_div(&a).is_none());
    }

    #[test]
    fn evaluation_at_roots_of_unity() {
        use crate::algebra::cyclotomic::CyclotomicNumber;
        // t^2 - t + 1 at -1 is 3
        let p = LaurentPoly::from_terms(
            1,
            [
                (vec![2], BigInt::from(1)),
                (vec![1], BigInt::from(-1)),
                (vec![0], BigInt::from(1)),
            ],
        );
        let minus_one = CyclotomicNumber::root_of_unity(2, 1);
        assert_eq!(
            p.eval_cyclotomic(&[minus_one]).unwrap().to_integer().unwrap(),
            BigInt::from(3)
        );
        // at zeta_3 the value reduces to -2 zeta_3
        let z3 = CyclotomicNumber::root_of_unity(3, 1);
        let v = p.eval_cyclotomic(std::slice::from_ref(&z3)).unwrap();
        assert_eq!(
            v,
            z3.mul(&CyclotomicNumber::from_bigint(3, BigInt::from(-2)))
                .unwrap()
        );
        // at all-ones any polynomial gives its coefficient sum
        let q = LaurentPoly::from_terms(
            2,
            [
                (vec![1, -2], BigInt::from(4)),
                (vec![0, 3], BigInt::from(-7)),
            ],
        );
        let ones = vec![CyclotomicNumber::one(5), CyclotomicNumber::one(5)];
        assert_eq!(
            q.eval_cyclotomic(&ones).unwrap().to_integer().unwrap(),
            q.eval_all_ones()
        );
        // zero arguments are rejected because of negative exponents
        let zero = CyclotomicNumber::zero(5);
        assert!(matches!(
            q.eval_cyclotomic(&[zero, CyclotomicNumber::one(5)]),
            Err(Error::ZeroArgument { index: 0 })
        ));
        // conductor mismatch is rejected
        assert!(q
            .eval_cyclotomic(&[CyclotomicNumber::one(5), CyclotomicNumber::one(3)])
            .is_err());
    }

    #[test]
    fn display_rendering() {
        let p = LaurentPoly::from_terms(
            1,
            [
                (vec![2], BigInt::from(1)),
                (vec![1], BigInt::from(-1)),
                (vec![0], BigInt::from(1)),
            ],
        );
        assert_eq!(p.to_string(), "1 - t1 + t1^2");
        let q = LaurentPoly::from_terms(2, [(vec![-1, 1], BigInt::from(2))]);
        assert_eq!(q.to_string(), "2*t1^-1*t2");
    }
}
