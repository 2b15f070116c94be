use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("circle equation has A = B = C = 0")]
    AllZeroEquation,
    #[error("circle equation has negative discriminant (no real points)")]
    EmptyLocus,
    #[error("line normal has zero length")]
    DegenerateLine,
    #[error("radius must be positive, got {0}")]
    InvalidRadius(String),
    #[error("square root of {0} is not representable in the exact domain")]
    InexactSqrt(String),

    #[error("series centers differ: {0} vs {1}")]
    CenterMismatch(String, String),
    #[error("series is identically zero")]
    ZeroSeries,
    #[error("leading exponent {0} is odd; no Laurent square root")]
    OddLeadingExponent(i32),
    #[error("leading coefficient {0} is negative; no real square root")]
    NegativeLeadingCoefficient(String),
    #[error("coefficient C_{needed} is beyond the truncation order {order}")]
    InsufficientOrder { needed: i32, order: i32 },

    #[error("inputs {0} and {1} are not tangent (residual {2:e})")]
    NotMutuallyTangent(usize, usize, f64),
    #[error("no real solution: radicand {0} is negative")]
    NoRealSolution(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("parameter z = {0} makes the family degenerate (z^2 = 1)")]
    DegenerateParameter(String),
    #[error("denominator D vanishes at w = {0}")]
    VanishingDenominator(String),
    #[error("radius precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
