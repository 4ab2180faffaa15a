use thiserror::Error;

/// Errors produced by blend construction, evaluation and spec parsing.
#[derive(Debug, Error)]
pub enum BlendError {
    #[error("endpoints must differ, got a = b = {0}")]
    EqualEndpoints(f64),

    #[error("at least one coefficient array must be nonempty")]
    NoCoefficients,

    #[error("point {z} lies outside the knot range [{lo}, {hi}]")]
    OutOfRange { z: f64, lo: f64, hi: f64 },

    #[error("knots must be strictly increasing (violated at index {0})")]
    KnotsNotIncreasing(usize),

    #[error("a string of blends needs at least two knots, got {0}")]
    TooFewKnots(usize),

    #[error("{knots} knots but {arrays} Taylor arrays")]
    KnotDataMismatch { knots: usize, arrays: usize },

    #[error("Taylor array at knot {0} is empty")]
    EmptyKnotData(usize),

    #[error("gamma bound is undefined for j*mu >= 1 (j = {j}, mu = {mu})")]
    GammaOutOfRange { j: u64, mu: f64 },

    #[error("derivative bound M must be nonnegative, got {0}")]
    NegativeBound(f64),

    #[error("invalid numeric literal {0:?}")]
    BadNumber(String),

    #[error("value {0:?} has no finite rational representation")]
    NotRational(String),

    #[error("invalid spec: {0}")]
    Spec(String),

    #[error("invalid spec: {0}")]
    Json(#[from] serde_json::Error),
}
