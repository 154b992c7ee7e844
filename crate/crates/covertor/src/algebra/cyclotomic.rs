//! Exact arithmetic in the cyclotomic fields Q(zeta_n).
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(n)-1)`
//! reduced modulo the n-th cyclotomic polynomial, so representations are
//! unique and equality, zero tests and integrality tests are coefficient
//! comparisons. All coefficients are exact rationals; no floating point
//! enters any code path.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;

use super::qpoly::{cyclotomic_polynomial, QPoly};

struct FieldData {
    phi: usize,
    modulus: QPoly,
}

static FIELDS: LazyLock<Mutex<HashMap<u32, Arc<FieldData>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn field(n: u32) -> Arc<FieldData> {
    assert!(n >= 1, "conductor must be positive");
    let mut map = FIELDS.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| {
            let coeffs = cyclotomic_polynomial(n);
            Arc::new(FieldData {
                phi: coeffs.len() - 1,
                modulus: QPoly::from_bigint(&coeffs),
            })
        })
        .clone()
}

/// Degree of Q(zeta_n) over Q, i.e. Euler's phi.
pub fn euler_phi(n: u32) -> usize {
    field(n).phi
}

/// An element of Q(zeta_n) in reduced power-basis form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicNumber {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    fn from_qpoly(conductor: u32, p: QPoly) -> Self {
        let data = field(conductor);
        let reduced = if p.degree().map(|d| d >= data.phi).unwrap_or(false) {
            p.div_rem(&data.modulus).1
        } else {
            p
        };
        let mut coeffs = reduced.0;
        coeffs.resize(data.phi, BigRational::zero());
        CyclotomicNumber { conductor, coeffs }
    }

    pub fn zero(conductor: u32) -> Self {
        CyclotomicNumber::from_qpoly(conductor, QPoly::zero())
    }

    pub fn one(conductor: u32) -> Self {
        CyclotomicNumber::from_bigint(conductor, BigInt::one())
    }

    pub fn from_bigint(conductor: u32, v: BigInt) -> Self {
        CyclotomicNumber::from_rational(conductor, BigRational::from_integer(v))
    }

    pub fn from_rational(conductor: u32, v: BigRational) -> Self {
        CyclotomicNumber::from_qpoly(conductor, QPoly::from_coeffs(vec![v]))
    }

    /// zeta_n^k.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let n = conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        CyclotomicNumber::from_qpoly(conductor, QPoly::from_coeffs(coeffs))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    fn check_conductor(&self, rhs: &CyclotomicNumber) -> Result<(), Error> {
        if self.conductor != rhs.conductor {
            return Err(Error::ConductorMismatch {
                left: self.conductor,
                right: rhs.conductor,
            });
        }
        Ok(())
    }

    fn as_qpoly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn add(&self, rhs: &CyclotomicNumber) -> Result<CyclotomicNumber, Error> {
        self.check_conductor(rhs)?;
        Ok(CyclotomicNumber::from_qpoly(
            self.conductor,
            self.as_qpoly().add(&rhs.as_qpoly()),
        ))
    }

    pub fn sub(&self, rhs: &CyclotomicNumber) -> Result<CyclotomicNumber, Error> {
        self.check_conductor(rhs)?;
        Ok(CyclotomicNumber::from_qpoly(
            self.conductor,
            self.as_qpoly().sub(&rhs.as_qpoly()),
        ))
    }

    pub fn mul(&self, rhs: &CyclotomicNumber) -> Result<CyclotomicNumber, Error> {
        self.check_conductor(rhs)?;
        Ok(CyclotomicNumber::from_qpoly(
            self.conductor,
            self.as_qpoly().mul(&rhs.as_qpoly()),
        ))
    }

    pub fn neg(&self) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn inv(&self) -> Result<CyclotomicNumber, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero {
                conductor: self.conductor,
            });
        }
        let data = field(self.conductor);
        let (g, s) = self.as_qpoly().half_ext_gcd(&data.modulus);
        debug_assert_eq!(g.degree(), Some(0), "cyclotomic modulus is irreducible");
        Ok(CyclotomicNumber::from_qpoly(self.conductor, s))
    }

    pub fn div(&self, rhs: &CyclotomicNumber) -> Result<CyclotomicNumber, Error> {
        self.check_conductor(rhs)?;
        self.mul(&rhs.inv()?)
    }

    /// Complex conjugation, zeta -> zeta^(n-1).
    pub fn conj(&self) -> CyclotomicNumber {
        let n = self.conductor as usize;
        let mut acc = vec![BigRational::zero(); n.max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (n - i % n) % n;
            acc[e] += c;
        }
        CyclotomicNumber::from_qpoly(self.conductor, QPoly::from_coeffs(acc))
    }

    pub fn pow(&self, mut e: u64) -> Result<CyclotomicNumber, Error> {
        let mut base = self.clone();
        let mut acc = CyclotomicNumber::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Extracts the value as a rational number, failing when any power-basis
    /// coefficient beyond the constant is nonzero.
    pub fn to_rational(&self) -> Result<BigRational, Error> {
        if self.coeffs.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(Error::NotRationalInteger {
                detail: format!("{self} is not rational"),
            });
        }
        Ok(self.coeffs[0].clone())
    }

    /// Extracts the value as an integer; errors when the element is not a
    /// rational integer.
    pub fn to_integer(&self) -> Result<BigInt, Error> {
        let q = self.to_rational()?;
        if !q.is_integer() {
            return Err(Error::NotRationalInteger {
                detail: format!("{q} has a nontrivial denominator"),
            });
        }
        Ok(q.to_integer())
    }

    /// Whether the element is plus or minus a power of zeta_n.
    pub fn is_signed_root_of_unity(&self) -> bool {
        let n = self.conductor as i64;
        for k in 0..n {
            let z = CyclotomicNumber::root_of_unity(self.conductor, k);
            if *self == z || *self == z.neg() {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign_negative = c < &BigRational::zero();
            let mag = if sign_negative { -c } else { c.clone() };
            if first {
                if sign_negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "z")?,
                1 => write!(f, "{mag}*z")?,
                _ if mag.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        Ok(())
    }
}
