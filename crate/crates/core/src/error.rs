use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("pole at L = {0}")]
    Pole(Rational),

    #[error("dimension too small: n = {0}, need n >= 4")]
    DimensionTooSmall(usize),

    #[error("mixed contexts: element of g_{left} combined with element of g_{right}")]
    MixedContexts { left: usize, right: usize },

    #[error("matrix is not in the span of the basis of g_{0}")]
    NotInAlgebra(usize),

    #[error("Ad does not preserve algebra: image of {0} is not in the algebra")]
    AdNotPreserved(String),

    #[error("outside guaranteed shape: {0}")]
    OutsideShape(String),

    #[error("point in singular set D_n (t1 + x2 = 0)")]
    SingularSet,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("order matching produced a non-Delta-power relation at order {0}")]
    NonDeltaPower(usize),

    #[error("operator coefficients still depend on L; specialize first")]
    Unspecialized,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
