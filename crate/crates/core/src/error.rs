use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("interpolation nodes {0} and {1} coincide at the working precision")]
    CoincidentNodes(usize, usize),
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("p = {0} is not a supported prime here (need a prime <= 13)")]
    PrimeTooLarge(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix is not symplectic: {0}")]
    NotSymplectic(String),
    #[error("matrix is not in Gamma0({0})")]
    NotInGamma0(u64),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("series is not a unit: constant term vanishes")]
    NotAUnit,
    #[error("cusp series is not normalized: {0}")]
    NotCuspNormalized(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("polynomial is not monic of degree 6")]
    NotMonic,
    #[error("sextic is singular (vanishing discriminant)")]
    Singular,
    #[error("model transformation is degenerate: {0}")]
    DegenerateTransform(String),
    #[error("Richelot factorization {0} has vanishing determinant (split Jacobian)")]
    SplitInput(usize),
    #[error("isogenous j1-invariants {0} and {1} collide")]
    CollidingImages(usize, usize),
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("evaluator has a pole at sample {0}")]
    Pole(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
