//! Exact arithmetic: Gaussian rationals, quadratic extension towers,
//! sparse bivariate polynomials, ternary forms, rational functions and
//! small matrices over any of them.

mod form;
mod gaussian;
mod matrix;
mod poly;
mod ratfunc;
mod scalar;

use thiserror::Error;

pub use form::Form;
pub use gaussian::{Gaussian, Rational};
pub use matrix::Mat;
pub use poly::{Monomial, Poly, Vars};
pub use ratfunc::RatFunc;
pub use scalar::{Extension, Field, Scalar, SqrtOutcome, MAX_TOWER_DEPTH};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("square root would need a third nested extension")]
    TowerDepthExceeded,
    #[error("zero radicand")]
    ZeroRadicand,
    #[error("radicand is already a square; extension would not be proper")]
    NotProperExtension,
    #[error("scalars live in unrelated extension towers")]
    IncompatibleTowers,
    #[error("polynomial degree {actual} exceeds target degree {target}")]
    DegreeExceeded { actual: u32, target: u32 },
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Minimal commutative-ring interface shared by scalars, polynomials and
/// rational functions so that [`Mat`] can be generic over its entries.
pub trait Ring: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }

    fn same_as(&self, o: &Self) -> bool {
        self.minus(o).is_zero()
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
}
