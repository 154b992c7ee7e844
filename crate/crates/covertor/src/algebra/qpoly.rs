//! Dense univariate polynomials over the exact rationals, used internally
//! for reduction and inversion modulo cyclotomic polynomials.

use num::{BigInt, BigRational, One, Zero};

/// Coefficient list, index = degree, no trailing zeros (zero = empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn from_bigint(coeffs: &[BigInt]) -> Self {
        QPoly::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] -= c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::from_coeffs(self.0.iter().map(|c| c * k).collect())
    }

    /// Euclidean division; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &QPoly) -> (QPoly, QPoly) {
        let db = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.0[db].clone();
        let mut rem = self.0.clone();
        let mut quo = vec![
            BigRational::zero();
            self.0.len().saturating_sub(db).max(1)
        ];
        while rem.len() > db {
            let dr = rem.len() - 1;
            let coef = rem[dr].clone() / &lc;
            if !coef.is_zero() {
                quo[dr - db] = coef.clone();
                for (j, b) in rhs.0.iter().enumerate() {
                    rem[dr - db + j] -= &coef * b;
                }
            }
            rem.pop();
            while rem.last().map(Zero::is_zero).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= db {
                break;
            }
        }
        (QPoly::from_coeffs(quo), QPoly::from_coeffs(rem))
    }

    /// Extended Euclid: returns `(g, s)` with `s*self ≡ g (mod modulus)` and
    /// `g` the monic gcd. Used for inversion modulo an irreducible modulus.
    pub fn half_ext_gcd(&self, modulus: &QPoly) -> (QPoly, QPoly) {
        let mut r0 = modulus.clone();
        let mut r1 = self.clone();
        let mut s0 = QPoly::zero();
        let mut s1 = QPoly::from_coeffs(vec![BigRational::one()]);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // make the gcd monic
        let lc = r0.0.last().cloned().unwrap_or_else(BigRational::one);
        (r0.scale(&lc.recip()), s0.scale(&lc.recip()))
    }
}

/// The n-th cyclotomic polynomial with integer coefficients, by repeated
/// exact division of x^n - 1 by the lower cyclotomic polynomials.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut memo: Vec<Option<Vec<BigInt>>> = vec![None; (n + 1) as usize];
    cyclo_rec(n, &mut memo)
}

fn cyclo_rec(n: u32, memo: &mut Vec<Option<Vec<BigInt>>>) -> Vec<BigInt> {
    if let Some(p) = &memo[n as usize] {
        return p.clone();
    }
    // x^n - 1
    let mut xn1 = vec![BigInt::zero(); (n + 1) as usize];
    xn1[0] = -BigInt::one();
    xn1[n as usize] = BigInt::one();
    let mut acc = QPoly::from_bigint(&xn1);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = QPoly::from_bigint(&cyclo_rec(d, memo));
            let (q, r) = acc.div_rem(&phi_d);
            debug_assert!(r.is_zero(), "cyclotomic division must be exact");
            acc = q;
        }
    }
    let out: Vec<BigInt> = acc
        .0
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    memo[n as usize] = Some(out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn divrem_and_ext_gcd() {
        // (x^2 - 1) / (x - 1) = x + 1
        let a = QPoly::from_bigint(&ints(&[-1, 0, 1]));
        let b = QPoly::from_bigint(&ints(&[-1, 1]));
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, QPoly::from_bigint(&ints(&[1, 1])));

        // inverse of x modulo x^2+1 is -x
        let modulus = QPoly::from_bigint(&ints(&[1, 0, 1]));
        let x = QPoly::from_bigint(&ints(&[0, 1]));
        let (g, s) = x.half_ext_gcd(&modulus);
        assert_eq!(g, QPoly::from_bigint(&ints(&[1])));
        let (_, chk) = s.mul(&x).div_rem(&modulus);
        assert_eq!(chk, QPoly::from_bigint(&ints(&[1])));
    }
}
