//! Co-Higgs fields on the Schwarzenberger bundles `V_k`: representations,
//! integrability, determinants and bundle metadata.

mod determinant;
mod field;
mod glue;
mod integrable;
mod schwarz;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::geometry::{Chart, GeometryError};

pub use determinant::{
    det_glue, det_structure, determinant, determinant_on, k1_shape, local_det_triple, DetSection,
    DetStructure, K1Shape,
};
pub use field::{CoHiggsField, CoHiggsK0, CoHiggsK1, CoHiggsK2, CoHiggsKBig, LocalField};
pub use glue::{phi0_for_target, phi0_glue_check, Phi0Glue};
pub use integrable::{integrability_obstruction, integrable};
pub use schwarz::{schwarz_info, SchwarzInfo, Splitting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoHiggsError {
    #[error("k = 3 is excluded: the classification does not cover that index")]
    ExcludedIndex,
    #[error("index {0} is not in the range of this field shape")]
    IndexOutOfRange(u32),
    #[error("degree bound violated: {0}")]
    DegreeBound(String),
    #[error("rho must be an irreducible conic")]
    NotIrreducible,
    #[error("lambda must be nonzero")]
    ZeroScalar,
    #[error("local matrix on chart {0} is not polynomial")]
    NotPolynomial(Chart),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
