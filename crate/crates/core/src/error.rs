use thiserror::Error;

/// Failures surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no monic normalization")]
    ZeroPolynomial,
    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(String),
    #[error("ghost vector has t_0 = {found}, expected degree {expected}")]
    InconsistentDegree { expected: String, found: String },
    #[error("ghost vector of length {len} is too short for degree {degree}")]
    GhostTooShort { len: usize, degree: usize },
    #[error("element does not have integer coefficients")]
    NotIntegerCoefficients,
    #[error("element is not a ratio of x-powers and cyclotomic polynomials")]
    NotPhiMember,
    #[error("ghost index {k} exceeds truncation level {level}")]
    BeyondLevel { k: u64, level: u64 },
    #[error("shift coefficient t_{s} - t_0 = {value} is not an integer")]
    NonIntegralShift { s: u64, value: String },
    #[error("necklace coefficient c_{index} = {value} is not an integer")]
    NonIntegralImage { index: u64, value: String },
    #[error("invalid endomorphism spec: {0}")]
    InvalidSpec(String),
    #[error("no q <= {max_q} satisfies the approximation bound")]
    NotFound { max_q: u64 },
    #[error("peel-off and Moebius inversion disagree at index {index}")]
    DecompositionMismatch { index: u64 },
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
