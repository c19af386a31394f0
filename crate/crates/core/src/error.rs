use alloc::string::String;

/// Errors raised by the algebra engine.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero in the scalar field")]
    DegenerateScalar,
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("cannot parse scalar literal `{0}`")]
    ParseScalar(String),
    #[error("input group is not abelian")]
    NonAbelianInput,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    SizeLimit { what: String, size: usize, limit: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("coradical has dimension {coradical_dim} but only {declared} group-likes were declared")]
    UndeclaredCoradical { coradical_dim: usize, declared: usize },
    #[error("declared element is not group-like: {0}")]
    NotGrouplike(String),
    #[error("commutator ideal closure failed: {0}")]
    ClosureFailure(String),
    #[error("negative exponent on non-invertible variable t_{0}")]
    NegativeExponent(usize),
    #[error("the comatrix is singular")]
    SingularComatrix,
    #[error("denominator does not map to a unit of H_ab")]
    NonInvertibleDenominator,
    #[error("denominator cannot be rewritten with trivial image in H_ab")]
    DenominatorNotTrivializable,
    #[error("missing adapted-basis data: {0}")]
    MissingAdaptedBasis(String),
    #[error("retraction check failed: {0}")]
    GammaInvalid(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("structural check failed: {0}")]
    Structure(String),
}

pub type Result<T> = core::result::Result<T, Error>;
