//! Torsion of a presentation 2-complex twisted by a character.
//!
//! The presentation complex of a Wirtinger presentation (with the redundant
//! relator dropped) is a deformation retract of the link exterior; twisting
//! its cellular chain complex by a character gives a three-term complex
//!
//!   C_2 --(Fox derivatives)--> C_1 --(value - 1)--> C_0
//!
//! whose torsion is computed with canonical-basis pivots. All determinants
//! are taken in the polynomial ring first and evaluated afterwards, so the
//! result is defined up to sign and a root of unity.

use crate::algebra::cyclotomic::CyclotomicNumber;
use crate::error::Error;
use crate::link::{fox_derivative, WirtingerPresentation};

use super::complex::BasedChainComplex;
use super::field::FieldMatrix;
use super::torsion::{torsion, Indeterminacy, TorsionValue};

/// Torsion of the twisted presentation complex. `values[g]` is the character
/// value of generator `g`; generators of one component must share a value.
/// Errors when the twisted complex is not acyclic, which happens exactly
/// when the evaluated Alexander polynomial vanishes.
pub fn twisted_presentation_torsion(
    p: &WirtingerPresentation,
    values: &[CyclotomicNumber],
) -> Result<TorsionValue<CyclotomicNumber>, Error> {
    let n = p.num_generators();
    if values.len() != n {
        return Err(Error::DimensionMismatch {
            context: format!("{n} generators need {n} character values"),
        });
    }
    let conductor = values
        .first()
        .map(CyclotomicNumber::conductor)
        .unwrap_or(1);
    let one = CyclotomicNumber::one(conductor);
    // per-component values, consistent across generators
    let mu = p.num_components();
    let mut comp_values: Vec<Option<CyclotomicNumber>> = vec![None; mu];
    for (g, v) in values.iter().enumerate() {
        if v.conductor() != conductor {
            return Err(Error::ConductorMismatch {
                left: conductor,
                right: v.conductor(),
            });
        }
        let c = p.component_of(g);
        match &comp_values[c] {
            None => comp_values[c] = Some(v.clone()),
            Some(existing) if existing == v => {}
            Some(_) => {
                return Err(Error::invalid(
                    "generators of one component must share a character value",
                ))
            }
        }
    }
    let comp_values: Vec<CyclotomicNumber> = comp_values
        .into_iter()
        .enumerate()
        .map(|(c, v)| {
            v.ok_or_else(|| Error::BadPresentation {
                detail: format!("component {c} has no generator"),
            })
        })
        .collect::<Result<_, _>>()?;

    let r = p.relators().len();
    let mut relators: Vec<_> = p.relators().to_vec();
    if r == n {
        relators.pop();
    } else if r + 1 != n {
        return Err(Error::NonAcyclic {
            detail: Some(format!(
                "presentation has deficiency {} after reduction",
                n as i64 - r as i64
            )),
        });
    }

    // boundary C_1 -> C_0: generator g maps to (value - 1) times the base point
    let mut d1 = FieldMatrix::zero(1, n, one.clone());
    for g in 0..n {
        d1.set(0, g, values[g].sub(&one)?);
    }
    // boundary C_2 -> C_1: Fox derivatives of the relators, evaluated
    let vars = p.component_tags();
    let mut d2 = FieldMatrix::zero(n, relators.len(), one.clone());
    for (j, rel) in relators.iter().enumerate() {
        for g in 0..n {
            let poly = fox_derivative(rel, g, vars, mu)?;
            d2.set(g, j, poly.eval_cyclotomic(&comp_values)?);
        }
    }

    let cx = BasedChainComplex::new(vec![1, n, relators.len()], vec![d1, d2], one)?;
    let t = torsion(&cx, None)?;
    Ok(TorsionValue {
        value: t.value,
        defined_up_to: Indeterminacy::SignAndRootsOfUnity,
    })
}
