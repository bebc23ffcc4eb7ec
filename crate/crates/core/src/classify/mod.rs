//! Normal forms for determinants: square completion, `λ² + μμ'` splittings,
//! canonical quotient representatives and image points.

mod canon;
mod image;
mod square;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::geometry::GeometryError;

pub use canon::{canonicalize_pm, canonicalize_qc, canonicalize_rho, equal_pm, PlusMinus};
pub use image::{
    classify_triple, image_equal, image_point, invariant_equal, split_q_sym2, structure_image,
    ImagePoint,
};
pub use square::{
    complete_square, decompose_linear_product, square_case, LinearProduct, SquareCase, SquareDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("input is zero where a nonzero value is required")]
    ZeroInput,
    #[error("degree {0} exceeds 2")]
    DegreeExceeded(u32),
    #[error("k = 3 is excluded")]
    ExcludedIndex,
    #[error("determinant matches none of the known shapes")]
    Unclassifiable,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
