//! Order of the first homology of a finite abelian branched cover.
//!
//! For every character of the covering group, the Alexander polynomial of
//! the sublink the character supports is evaluated at the character's
//! meridian values; the homology order is the absolute value of
//!
//!   prod_xi Delta(xi) * |G| / prod_(single-support xi) (1 - xi(m)),
//!
//! a quotient that is certified to be conjugation-fixed and a rational
//! integer before it is reported. A vanishing evaluation means the homology
//! is infinite and the order is reported as zero.

pub mod input;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::abelian::{Character, CoveringSpec};
use crate::algebra::cyclotomic::CyclotomicNumber;
use crate::algebra::laurent::LaurentPoly;
use crate::error::Error;
use crate::link::{build_alexander_data, wirtinger, AlexanderData, LinkDiagram};
use crate::oracle::{oracle_order, OracleResult};

/// Where the Alexander polynomials come from.
#[derive(Clone, Debug)]
pub enum LinkSource {
    /// A braid closure; sublink polynomials are computed by Fox calculus.
    Diagram(LinkDiagram),
    /// An explicit polynomial table for links with no diagram at hand.
    Table { components: usize, data: AlexanderData },
}

impl LinkSource {
    pub fn num_components(&self) -> usize {
        match self {
            LinkSource::Diagram(d) => d.num_components(),
            LinkSource::Table { components, .. } => *components,
        }
    }
}

/// One row of the per-character report.
#[derive(Clone, Debug)]
pub struct CharacterRow {
    pub exps: Vec<u64>,
    /// 0-based indices of the supported components.
    pub support: Vec<usize>,
    /// The evaluated sublink polynomial.
    pub value: CyclotomicNumber,
    /// Whether the support is a single component.
    pub single_support: bool,
    pub nonvanishing: bool,
}

/// Full account of one covering computation.
#[derive(Clone, Debug)]
pub struct CoverReport {
    /// |H_1| of the branched cover; 0 means infinite.
    pub order: BigInt,
    pub homology_sphere: bool,
    pub rows: Vec<CharacterRow>,
    /// Correction numerator |G|.
    pub group_order: u64,
    /// Correction denominator: product of 1 - xi(m) over single-support
    /// characters.
    pub correction_denominator: CyclotomicNumber,
    pub conductor: u32,
    pub invariant_factors: Vec<u64>,
    /// The sublink polynomials that entered the computation, rendered with
    /// component-numbered variables.
    pub polynomials: Vec<(Vec<usize>, String)>,
    pub oracle: Option<OracleResult>,
}

impl CoverReport {
    /// The nonvanishing table: one flag per character, aggregate equal to
    /// `homology_sphere`.
    pub fn nonvanishing_table(&self) -> Vec<(Vec<u64>, bool)> {
        self.rows
            .iter()
            .map(|r| (r.exps.clone(), r.nonvanishing))
            .collect()
    }
}

/// Computes the branched cover homology order from link data and covering
/// data. The meridian image count must match the component count and the
/// images must generate the group.
pub fn branched_order(link: &LinkSource, spec: &CoveringSpec) -> Result<CoverReport, Error> {
    let mu = link.num_components();
    if spec.meridian_images.len() != mu {
        return Err(Error::DimensionMismatch {
            context: format!(
                "{mu} components need {mu} meridian images, got {}",
                spec.meridian_images.len()
            ),
        });
    }
    if !spec.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let group = &spec.group;
    let n = group.exponent();
    let dual = group.dual();

    // distinct supports, each polynomial computed once
    let supports: Vec<Vec<usize>> = dual.iter().map(|xi| spec.character_support(xi)).collect();
    let mut needed: Vec<Vec<usize>> = supports.clone();
    needed.sort();
    needed.dedup();
    let data_storage;
    let data: &AlexanderData = match link {
        LinkSource::Diagram(d) => {
            data_storage = build_alexander_data(d, &needed)?;
            &data_storage
        }
        LinkSource::Table { data, .. } => data,
    };
    let mut polynomials = Vec::new();
    for s in &needed {
        match data.get(s) {
            Some(poly) if !s.is_empty() => {
                let vars: Vec<usize> = s.iter().map(|c| c + 1).collect();
                polynomials.push((s.clone(), input::render_polynomial(poly, &vars)));
            }
            Some(_) => {}
            None => {
                return Err(Error::MissingPolynomial {
                    support: s
                        .iter()
                        .map(|c| (c + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                });
            }
        }
    }

    let one = CyclotomicNumber::one(n);
    let mut rows = Vec::with_capacity(dual.len());
    for (xi, support) in dual.iter().zip(&supports) {
        let value = evaluate_character(spec, xi, support, data, n)?;
        rows.push(CharacterRow {
            exps: xi.exps().to_vec(),
            support: support.clone(),
            single_support: support.len() == 1,
            nonvanishing: !value.is_zero(),
            value,
        });
    }

    // correction denominator over single-support characters
    let mut denominator = one.clone();
    for (xi, row) in dual.iter().zip(&rows) {
        if row.single_support {
            let m = &spec.meridian_images[row.support[0]];
            let factor = one.sub(&group.character_eval(xi, m)?)?;
            denominator = denominator.mul(&factor)?;
        }
    }

    let homology_sphere = rows.iter().all(|r| r.nonvanishing);
    let order = if !homology_sphere {
        BigInt::zero()
    } else {
        let mut product = one.clone();
        for row in &rows {
            product = product.mul(&row.value)?;
        }
        // reality certificate: conjugation permutes the characters and fixes
        // both the evaluation product and the denominator
        if product.conj() != product {
            return Err(Error::CertificateFailure {
                detail: format!("evaluation product {product} is not conjugation-fixed"),
            });
        }
        if denominator.conj() != denominator {
            return Err(Error::CertificateFailure {
                detail: format!("correction denominator {denominator} is not conjugation-fixed"),
            });
        }
        let scaled = product
            .mul(&CyclotomicNumber::from_bigint(n, BigInt::from(group.order())))?
            .div(&denominator)?;
        // integrality certificate
        let int = scaled.to_integer().map_err(|_| Error::CertificateFailure {
            detail: format!("final quotient {scaled} is not a rational integer"),
        })?;
        int.abs()
    };

    Ok(CoverReport {
        order,
        homology_sphere,
        rows,
        group_order: group.order(),
        correction_denominator: denominator,
        conductor: n,
        invariant_factors: group.invariant_factors().to_vec(),
        polynomials,
        oracle: None,
    })
}

fn evaluate_character(
    spec: &CoveringSpec,
    xi: &Character,
    support: &[usize],
    data: &AlexanderData,
    conductor: u32,
) -> Result<CyclotomicNumber, Error> {
    if support.is_empty() {
        return Ok(CyclotomicNumber::one(conductor));
    }
    let poly = data.get(support).ok_or_else(|| Error::MissingPolynomial {
        support: support
            .iter()
            .map(|c| (c + 1).to_string())
            .collect::<Vec<_>>()
            .join(","),
    })?;
    let args: Vec<CyclotomicNumber> = support
        .iter()
        .map(|&i| spec.group.character_eval(xi, &spec.meridian_images[i]))
        .collect::<Result<_, _>>()?;
    poly.eval_cyclotomic(&args)
}

/// Runs the oracle for the same covering and attaches the result; errors
/// with a certificate failure when the two orders disagree.
pub fn branched_order_with_oracle(
    diagram: &LinkDiagram,
    spec: &CoveringSpec,
) -> Result<CoverReport, Error> {
    let mut report = branched_order(&LinkSource::Diagram(diagram.clone()), spec)?;
    let p = wirtinger(diagram);
    let oracle = oracle_order(&p, spec)?;
    if oracle.order != report.order {
        return Err(Error::CertificateFailure {
            detail: format!(
                "formula order {} disagrees with oracle order {}",
                report.order, oracle.order
            ),
        });
    }
    report.oracle = Some(oracle);
    Ok(report)
}

/// Combines a diagram with an explicit polynomial table: the table wins on
/// overlapping sublinks, the diagram fills the rest, and any disagreement
/// between the two is returned as a warning string.
pub fn merged_source(
    diagram: &LinkDiagram,
    table: &AlexanderData,
    spec: &CoveringSpec,
) -> Result<(LinkSource, Vec<String>), Error> {
    let mu = diagram.num_components();
    let mut needed: Vec<Vec<usize>> = spec
        .group
        .dual()
        .iter()
        .map(|xi| spec.character_support(xi))
        .collect();
    needed.sort();
    needed.dedup();
    let derived = build_alexander_data(diagram, &needed)?;
    let mut warnings = Vec::new();
    let mut merged = AlexanderData::new();
    for (key, poly) in derived.entries() {
        if key.is_empty() {
            continue;
        }
        merged.insert(key.clone(), poly.clone())?;
    }
    for (key, poly) in table.entries() {
        if key.is_empty() {
            continue;
        }
        if let Some(computed) = derived.get(key) {
            if computed != poly {
                warnings.push(format!(
                    "sublink {{{}}}: table polynomial {} differs from the diagram value {}",
                    key.iter()
                        .map(|c| (c + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    poly,
                    computed
                ));
            }
        }
        merged.insert(key.clone(), poly.clone())?;
    }
    Ok((
        LinkSource::Table {
            components: mu,
            data: merged,
        },
        warnings,
    ))
}

/// Input for the higher-dimensional cyclic product: the covering degree and
/// the one-variable homology orders of the infinite cyclic cover, listed by
/// degree.
#[derive(Clone, Debug)]
pub struct HigherDimInput {
    pub degree: u32,
    pub invariants: Vec<LaurentPoly>,
}

impl HigherDimInput {
    pub fn new(degree: u32, invariants: Vec<LaurentPoly>) -> Result<Self, Error> {
        if degree < 2 {
            return Err(Error::invalid("covering degree must be at least 2"));
        }
        if invariants.is_empty() {
            return Err(Error::invalid("need at least one invariant"));
        }
        if invariants.iter().any(|p| p.nvars() != 1) {
            return Err(Error::invalid("invariants must be one-variable polynomials"));
        }
        Ok(HigherDimInput { degree, invariants })
    }
}

#[derive(Clone, Debug)]
pub enum HigherDimOutcome {
    /// Some invariant vanishes at a d-th root of unity.
    NotRationalHomologySphere { invariant: usize, root_power: u32 },
    /// The alternating product of |prod_k A_i(zeta^k)|.
    Product(BigRational),
}

/// Evaluates each invariant at all d-th roots of unity and forms the
/// alternating product of the absolute values. Conjugate pairing makes each
/// inner product rational; that is certified exactly.
pub fn higher_dim_product(input: &HigherDimInput) -> Result<HigherDimOutcome, Error> {
    let d = input.degree;
    let mut acc = BigRational::one();
    for (idx, poly) in input.invariants.iter().enumerate() {
        let mut inner = CyclotomicNumber::one(d);
        for k in 1..=d {
            let z = CyclotomicNumber::root_of_unity(d, k as i64);
            let v = poly.eval_cyclotomic(std::slice::from_ref(&z))?;
            if v.is_zero() {
                return Ok(HigherDimOutcome::NotRationalHomologySphere {
                    invariant: idx + 1,
                    root_power: k,
                });
            }
            inner = inner.mul(&v)?;
        }
        let rational = inner.to_rational().map_err(|_| Error::CertificateFailure {
            detail: format!("root-of-unity product {inner} is not rational"),
        })?;
        let magnitude = rational.abs();
        if idx % 2 == 0 {
            acc *= magnitude;
        } else {
            acc /= magnitude;
        }
    }
    Ok(HigherDimOutcome::Product(acc))
}
