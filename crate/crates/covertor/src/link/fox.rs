//! Free differential calculus on presentation words.

use num::BigInt;

use crate::algebra::laurent::LaurentPoly;
use crate::error::Error;

use super::wirtinger::Word;

/// Fox derivative of a word with respect to generator `x`, pushed through
/// the abelianization that sends generator `g` to the variable
/// `t_{var_of[g]}`.
///
/// Rules: d(x)/dx = 1, d(y)/dx = 0 for y != x, d(uv)/dx = du/dx + phi(u)
/// dv/dx, d(u^-1)/dx = -phi(u)^-1 du/dx.
pub fn fox_derivative(
    word: &Word,
    x: usize,
    var_of: &[usize],
    nvars: usize,
) -> Result<LaurentPoly, Error> {
    if x >= var_of.len() {
        return Err(Error::UnknownGenerator { index: x });
    }
    let mut result = LaurentPoly::zero(nvars);
    // running abelianized prefix, as an exponent vector
    let mut prefix = vec![0i64; nvars];
    for &(g, e) in word.letters() {
        let var = *var_of.get(g).ok_or(Error::UnknownGenerator { index: g })?;
        if e == 1 {
            if g == x {
                let mono = LaurentPoly::from_terms(nvars, [(prefix.clone(), BigInt::from(1))]);
                result = result.add(&mono)?;
            }
            prefix[var] += 1;
        } else {
            prefix[var] -= 1;
            if g == x {
                let mono = LaurentPoly::from_terms(nvars, [(prefix.clone(), BigInt::from(-1))]);
                result = result.add(&mono)?;
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[(usize, i8)]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn derivative_of_generator() {
        let vars = vec![0usize, 1];
        let d = fox_derivative(&word(&[(0, 1)]), 0, &vars, 2).unwrap();
        assert!(d.is_one());
        let d0 = fox_derivative(&word(&[(1, 1)]), 0, &vars, 2).unwrap();
        assert!(d0.is_zero());
    }

    #[test]
    fn derivative_of_inverse() {
        // d(x^-1)/dx = -t_x^-1
        let vars = vec![0usize];
        let d = fox_derivative(&word(&[(0, -1)]), 0, &vars, 1).unwrap();
        let expect = LaurentPoly::from_terms(1, [(vec![-1], BigInt::from(-1))]);
        assert_eq!(d, expect);
    }

    #[test]
    fn derivative_of_commutator() {
        // d(x y x^-1 y^-1)/dx = 1 - t_y
        let vars = vec![0usize, 1];
        let w = word(&[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let d = fox_derivative(&w, 0, &vars, 2).unwrap();
        let expect = LaurentPoly::from_terms(
            2,
            [(vec![0, 0], BigInt::from(1)), (vec![0, 1], BigInt::from(-1))],
        );
        assert_eq!(d, expect);
        // and d/dy = t_x - 1
        let dy = fox_derivative(&w, 1, &vars, 2).unwrap();
        let expect_y = LaurentPoly::from_terms(
            2,
            [(vec![1, 0], BigInt::from(1)), (vec![0, 0], BigInt::from(-1))],
        );
        assert_eq!(dy, expect_y);
    }

    #[test]
    fn unknown_generator_is_an_error() {
        let vars = vec![0usize];
        assert!(fox_derivative(&word(&[(3, 1)]), 0, &vars, 1).is_err());
    }

    #[test]
    fn product_rule_on_random_splits() {
        // d(uv)/dx = du/dx + phi(u) dv/dx
        let vars = vec![0usize, 1, 0];
        let u = word(&[(0, 1), (1, -1), (2, 1)]);
        let v = word(&[(2, -1), (0, 1), (1, 1)]);
        let uv = u.concat(&v);
        for x in 0..3 {
            let lhs = fox_derivative(&uv, x, &vars, 2).unwrap();
            let du = fox_derivative(&u, x, &vars, 2).unwrap();
            let dv = fox_derivative(&v, x, &vars, 2).unwrap();
            let phi_u = {
                let sums = u.exponent_sums(3);
                let mut exp = vec![0i64; 2];
                for (g, &s) in sums.iter().enumerate() {
                    exp[vars[g]] += s;
                }
                LaurentPoly::from_terms(2, [(exp, BigInt::from(1))])
            };
            let rhs = du.add(&phi_u.mul(&dv).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
