//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },

    #[error("division by zero in Q(zeta_{conductor})")]
    DivisionByZero { conductor: u32 },

    #[error("evaluation argument {index} is zero; negative exponents are undefined")]
    ZeroArgument { index: usize },

    #[error("value is not a rational integer: {detail}")]
    NotRationalInteger { detail: String },

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("exact division failed: {context}")]
    NonExactDivision { context: String },

    #[error("deleted-column minors disagree: {left} vs {right}")]
    InconsistentMinors { left: String, right: String },

    #[error("keep set is empty")]
    EmptyKeep,

    #[error("unknown generator index {index}")]
    UnknownGenerator { index: usize },

    #[error("presentation is malformed: {detail}")]
    BadPresentation { detail: String },

    #[error("supplied vectors are not a homology basis: {detail}")]
    NotHomologyBasis { detail: String },

    #[error("chain complex is not acyclic{}", detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default())]
    NonAcyclic { detail: Option<String> },

    #[error("boundary of boundary is nonzero at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("meridian images do not generate the group")]
    NotSurjective,

    #[error("no polynomial supplied for sublink {{{support}}}")]
    MissingPolynomial { support: String },

    #[error("certificate failure: {detail}")]
    CertificateFailure { detail: String },

    #[error("input too large: {detail}")]
    TooLarge { detail: String },

    #[error("parse error: {detail}")]
    Parse { detail: String },

    #[error("invalid input: {detail}")]
    InvalidInput { detail: String },
}

impl Error {
    pub fn parse(detail: impl Into<String>) -> Self {
        Error::Parse {
            detail: detail.into(),
        }
    }

    pub fn invalid(detail: impl Into<String>) -> Self {
        Error::InvalidInput {
            detail: detail.into(),
        }
    }
}
